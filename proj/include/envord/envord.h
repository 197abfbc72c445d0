/* C interface to the envord normal-ordering library.
 *
 * All handles are opaque. Functions return an envord_status; on failure a
 * message is available from envord_last_error() on the calling thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with envord_string_free().
 */
#ifndef ENVORD_H
#define ENVORD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ENVORD_API __declspec(dllexport)
#else
#define ENVORD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0-3 double as CLI exit codes. */
typedef enum envord_status {
  ENVORD_OK = 0,
  ENVORD_VALIDATION_FAILED = 1,
  ENVORD_PARSE_ERROR = 2,
  ENVORD_COUNTEREXAMPLE = 3,
  ENVORD_INVALID_ARGUMENT = 4,
  ENVORD_IO_ERROR = 5,
  ENVORD_INTERNAL_ERROR = 6
} envord_status;

typedef struct envord_algebra envord_algebra;

typedef struct envord_suite_config {
  uint64_t seed;
  int cases;
  int max_degree;
  /* Comma-separated property names; NULL or "" selects all. */
  const char* properties;
  /* Comma-separated ring descriptors ("Z,Zmod 4"); NULL or "" keeps all. */
  const char* rings;
} envord_suite_config;

ENVORD_API const char* envord_version(void);
ENVORD_API const char* envord_last_error(void);
ENVORD_API void envord_string_free(char* s);

/* seed 42, 100 cases, max degree 4, everything selected. */
ENVORD_API void envord_suite_config_init(envord_suite_config* cfg);

/* Parses an algebra description. `name` labels the algebra in reports and
 * may be NULL. */
ENVORD_API envord_status envord_algebra_parse(const char* text, const char* name, envord_algebra** out);
/* Reads and parses a file; the file stem becomes the name. */
ENVORD_API envord_status envord_algebra_load(const char* path, envord_algebra** out);
ENVORD_API void envord_algebra_free(envord_algebra* alg);

ENVORD_API size_t envord_algebra_dimension(const envord_algebra* alg);
/* Canonical description text. */
ENVORD_API envord_status envord_algebra_print(const envord_algebra* alg, char** out);

/* Lie-axiom and split report. ENVORD_VALIDATION_FAILED when anything is
 * violated; the report is produced either way. */
ENVORD_API envord_status envord_validate(const envord_algebra* alg, char** report);

/* Normal-ordered form of `expr`, one "<coeff> * <w1> (x) <w2>" term per
 * line. With cross_check set, disagreement with the straightening oracle
 * yields ENVORD_COUNTEREXAMPLE. */
ENVORD_API envord_status envord_normal_order(const envord_algebra* alg, const char* expr, int cross_check,
                                             char** out);

/* PBW canonical form, one "<coeff> * <word>" term per line. `order` lists
 * every basis name separated by whitespace, or is NULL for declaration
 * order. */
ENVORD_API envord_status envord_straighten(const envord_algebra* alg, const char* expr, const char* order,
                                           char** out);

/* Runs the property suite on `alg`, or on the builtin registry when `alg`
 * is NULL. Returns ENVORD_VALIDATION_FAILED if an entry fails validation,
 * otherwise ENVORD_COUNTEREXAMPLE if any property fails. */
ENVORD_API envord_status envord_check(const envord_algebra* alg, const envord_suite_config* cfg, char** report);

#ifdef __cplusplus
}
#endif

#endif /* ENVORD_H */
