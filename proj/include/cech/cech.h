#ifndef CECH_CECH_H
#define CECH_CECH_H

#include <stdint.h>

#if defined(_WIN32)
#define CECH_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CECH_API __attribute__((visibility("default")))
#else
#define CECH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Exit-code compatible status values. */
typedef enum {
  CECH_OK = 0,
  CECH_INVALID = 2,             /* schema or validation failure; message names the JSON path */
  CECH_VERIFICATION_FAILED = 3, /* an internal invariant failed */
  CECH_BUDGET_EXCEEDED = 4
} cech_status;

typedef struct cech_request cech_request;
typedef struct cech_result cech_result;

CECH_API const char* cech_version(void);

/* NULL-terminated list of command names. */
CECH_API const char* const* cech_commands(void);

/* Returns NULL when command is NULL. The command is checked at execute time. */
CECH_API cech_request* cech_request_new(const char* command);
CECH_API void cech_request_free(cech_request* request);

/* The payload is copied; it is parsed only by cech_execute. */
CECH_API void cech_request_set_payload(cech_request* request, const char* json);
CECH_API void cech_request_set_max_degree(cech_request* request, int max_degree);
CECH_API void cech_request_set_budget(cech_request* request, uint64_t budget);
CECH_API void cech_request_set_verify(cech_request* request, int verify);

/* Always returns a result (never NULL), even for a NULL request. */
CECH_API cech_result* cech_execute(const cech_request* request);
/* Executes {"command": ..., "payload": ..., "options": ...}. */
CECH_API cech_result* cech_execute_json(const char* request_json);

CECH_API cech_status cech_result_status(const cech_result* result);
/* Result document; empty string unless the status is CECH_OK. */
CECH_API const char* cech_result_json(const cech_result* result);
/* Diagnostic; empty string when the status is CECH_OK. */
CECH_API const char* cech_result_message(const cech_result* result);
CECH_API void cech_result_free(cech_result* result);

#ifdef __cplusplus
}
#endif

#endif
