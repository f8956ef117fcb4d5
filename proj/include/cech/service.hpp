#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cech/json_io.hpp"

namespace cech::service {

struct Options {
  int max_degree = -1;                 // < 0: command default (usually dim X)
  std::optional<std::uint64_t> budget;  // search / table-check budget
  bool verify = false;
};

enum class Status : int { ok = 0, invalid = 2, verification_failed = 3, budget_exceeded = 4 };

struct Response {
  Status status = Status::ok;
  std::string body;     // result document (pretty JSON) when status is ok
  std::string message;  // diagnostic otherwise
};

/// cohomology, connecting, les, tower, spectral, gerbe-lift, validate
const std::vector<std::string>& commands();

/// Runs one command; throws the engine exceptions. Keys are emitted in sorted order.
io::Json run(const std::string& command, const io::Json& payload, const Options& options);

/// Never throws: parse errors and engine exceptions become status codes.
Response execute(const std::string& command, const std::string& payload, const Options& options);
/// {"command": ..., "payload": {...}, "options": {...}}
Response execute_request(const std::string& request);

}  // namespace cech::service
