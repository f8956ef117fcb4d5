#pragma once

#include <stdexcept>
#include <string>

namespace cech {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: malformed tables, non-cocycles, ill-defined maps, bad indices.
/// `path` names the offending location (a JSON path when the input came from a document).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message, std::string path = {})
      : Error(path.empty() ? message : path + ": " + message), message_(message), path_(std::move(path)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& path() const noexcept { return path_; }

  ValidationError at(const std::string& prefix) const {
    return ValidationError(message_, path_.empty() ? prefix : prefix + "." + path_);
  }

 private:
  std::string message_;
  std::string path_;
};

/// An internal invariant failed (e.g. d∘d != 0 on a generated complex). Always a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// A configured size budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cech
