#ifndef LIETEMPER_H
#define LIETEMPER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LIETEMPER_BUILDING)
#define LT_API __attribute__((visibility("default")))
#else
#define LT_API
#endif

typedef struct lt_pair lt_pair;

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_PARSE = 1,
  LT_ERR_VALIDATION = 2,
  LT_ERR_UNSUPPORTED = 3,
  LT_ERR_IRRATIONAL = 4,
  LT_ERR_BUDGET = 5,
  LT_ERR_MISSING_COMPLEX = 6,
  LT_ERR_INCONSISTENT = 7,
  LT_ERR_ARGUMENT = 8,
  LT_ERR_INTERNAL = 9,
  LT_ERR_VERIFY = 10
} lt_status;

typedef struct lt_check_options {
  const char* questions; /* comma separated, NULL or "all" for every question */
  size_t samples;
  uint64_t seed;
  size_t cone_budget;
} lt_check_options;

/* samples 64, seed 0, cone budget 10^6, all questions */
LT_API void lt_check_options_init(lt_check_options* opts);

LT_API lt_status lt_pair_from_family(const char* spec, lt_pair** out);
LT_API lt_status lt_pair_from_file(const char* path, lt_pair** out);
LT_API lt_status lt_pair_from_text(const char* text, lt_pair** out);
LT_API void lt_pair_free(lt_pair* pair);

/* Strings returned through char** are owned by the caller: release with lt_string_free. */
LT_API lt_status lt_pair_serialize(const lt_pair* pair, char** out);
LT_API lt_status lt_pair_name(const lt_pair* pair, char** out);

/* Machine report (JSON). */
LT_API lt_status lt_check(const lt_pair* pair, const lt_check_options* opts, char** report_out);
LT_API lt_status lt_render_human(const char* report, char** out);

/* space: "h", "g/h" or "g"; points: ';' separated, coordinates ',' separated (may be NULL). */
LT_API lt_status lt_rho(const lt_pair* pair, const char* space, const char* points, int machine, char** out);

LT_API lt_status lt_catalog_list(const char* fixtures_dir, char** out);
LT_API lt_status lt_catalog_show(const char* family, char** out);

/* LT_OK when every certificate re-checks, LT_ERR_VERIFY otherwise; details in *out. */
LT_API lt_status lt_verify_report(const char* report, char** out);

/* Message of the last failure on this thread ("" if none). */
LT_API const char* lt_last_error(void);
LT_API const char* lt_status_name(lt_status status);
LT_API void lt_string_free(char* s);
LT_API const char* lt_version(void);

#ifdef __cplusplus
}
#endif

#endif
