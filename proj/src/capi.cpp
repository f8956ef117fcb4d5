#include "cech/cech.h"

#include <new>
#include <string>

#include "cech/service.hpp"

struct cech_request {
  std::string command;
  std::string payload = "{}";
  cech::service::Options options;
};

struct cech_result {
  cech::service::Response response;
};

namespace {

// Returned when the result itself cannot be allocated; keeps the never-NULL contract.
cech_result out_of_memory{{cech::service::Status::budget_exceeded, "", "budget exceeded: out of memory"}};

cech_result* wrap(cech::service::Response r) {
  try {
    return new cech_result{std::move(r)};
  } catch (...) {
    return &out_of_memory;
  }
}

}  // namespace

extern "C" {

const char* cech_version(void) { return "1.0.0"; }

const char* const* cech_commands(void) {
  static const char* const names[] = {"cohomology", "connecting", "les",     "tower",
                                      "spectral",   "gerbe-lift", "validate", nullptr};
  return names;
}

cech_request* cech_request_new(const char* command) {
  if (!command) return nullptr;
  try {
    auto* r = new cech_request;
    try {
      r->command = command;
    } catch (...) {
      delete r;
      return nullptr;
    }
    return r;
  } catch (...) {
    return nullptr;
  }
}

void cech_request_free(cech_request* request) { delete request; }

void cech_request_set_payload(cech_request* request, const char* json) {
  if (!request) return;
  try {
    request->payload = json ? json : "";
  } catch (...) {
    request->payload.clear();  // an empty payload is rejected as invalid JSON
  }
}

void cech_request_set_max_degree(cech_request* request, int max_degree) {
  if (request) request->options.max_degree = max_degree;
}

void cech_request_set_budget(cech_request* request, uint64_t budget) {
  if (request) request->options.budget = budget;
}

void cech_request_set_verify(cech_request* request, int verify) {
  if (request) request->options.verify = verify != 0;
}

cech_result* cech_execute(const cech_request* request) {
  if (!request) return wrap({cech::service::Status::invalid, "", "null request"});
  try {
    return wrap(cech::service::execute(request->command, request->payload, request->options));
  } catch (...) {
    return &out_of_memory;
  }
}

cech_result* cech_execute_json(const char* request_json) {
  if (!request_json) return wrap({cech::service::Status::invalid, "", "null request"});
  try {
    return wrap(cech::service::execute_request(request_json));
  } catch (...) {
    return &out_of_memory;
  }
}

cech_status cech_result_status(const cech_result* result) {
  return result ? static_cast<cech_status>(result->response.status) : CECH_INVALID;
}

const char* cech_result_json(const cech_result* result) { return result ? result->response.body.c_str() : ""; }

const char* cech_result_message(const cech_result* result) {
  return result ? result->response.message.c_str() : "null result";
}

void cech_result_free(cech_result* result) {
  if (result != &out_of_memory) delete result;
}

}  // extern "C"
