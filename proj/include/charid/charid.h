/* C interface to the charid library. All handles are opaque; every call that can fail
 * returns a charid_status and leaves a message in charid_last_error() (thread local).
 * Strings handed out by the library are released with charid_string_free. */
#ifndef CHARID_CHARID_H
#define CHARID_CHARID_H

#include <stddef.h>
#include <stdint.h>

#if defined(CHARID_BUILDING_LIBRARY)
#define CHARID_API __attribute__((visibility("default")))
#else
#define CHARID_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum charid_status {
  CHARID_OK = 0,
  CHARID_ERR_INVALID_ARGUMENT = 1, /* unparsable input, unknown suite/kind, null pointer */
  CHARID_ERR_DOMAIN = 2,           /* weight not dominant, wrong label count, gamma outside range */
  CHARID_ERR_DIMENSION = 3,
  CHARID_ERR_DEGENERATE = 4,
  CHARID_ERR_INTERNAL = 5,
  CHARID_ERR_CONVENTION = 6,
  CHARID_ERR_NUMERIC = 7,
  CHARID_ERR_OUT_OF_MEMORY = 8
} charid_status;

typedef struct charid_job charid_job;
typedef struct charid_report charid_report;

CHARID_API const char* charid_version(void);
/* Message of the last failed call on this thread; "" if none. */
CHARID_API const char* charid_last_error(void);
CHARID_API void charid_string_free(char* s);

/* algebra: "gl3", "gl(3)", "gl2|1", "gl(2|1)". weight: "2,1,0" or "1,0|0". */
CHARID_API charid_status charid_job_create(const char* algebra, const char* weight, charid_job** out);
CHARID_API charid_status charid_job_from_json(const char* json, charid_job** out);
CHARID_API void charid_job_destroy(charid_job* job);
CHARID_API charid_status charid_job_to_json(const charid_job* job, char** out);

CHARID_API charid_status charid_job_set_tolerance(charid_job* job, double abs_eps, double rel_eps);
/* kind: "A", "Abar" or "General". */
CHARID_API charid_status charid_job_set_kind(charid_job* job, const char* kind);
/* gl(n) highest weight of the auxiliary representation for kind General. */
CHARID_API charid_status charid_job_set_mu(charid_job* job, const char* mu);
/* Negative controls; all zero restores the unperturbed job. */
CHARID_API charid_status charid_job_set_perturbation(charid_job* job, double root_shift, int flip_sign,
                                                     int drop_parity);
CHARID_API charid_status charid_job_set_timing(charid_job* job, int timing);

/* gl(n) representation export. */
CHARID_API charid_status charid_rep_dimension(const charid_job* job, uint64_t* out);
CHARID_API charid_status charid_rep_to_json(const charid_job* job, char** out);
CHARID_API charid_status charid_rep_to_csv(const charid_job* job, char** out);

/* suite: relations, identity, projectors, invariants, melcross, super. */
CHARID_API charid_status charid_verify(const charid_job* job, const char* suite, charid_report** out);
CHARID_API int charid_report_passed(const charid_report* report);
CHARID_API double charid_report_duration(const charid_report* report);
CHARID_API charid_status charid_report_to_json(const charid_report* report, char** out);
CHARID_API void charid_report_destroy(charid_report* report);

/* Exact roots as "a, b, c" for the job's kind (general kind: candidate set). */
CHARID_API charid_status charid_roots(const charid_job* job, char** out);
/* gl(m|n) type 1 star verdict, e.g. "atypical-type1, witness mu=1". */
CHARID_API charid_status charid_classify(const charid_job* job, char** out);
/* Lambda_0 + gamma eps + omega delta for the job's gl(m|n) weight as Lambda_0. Output like "(0,-1|1)". */
CHARID_API charid_status charid_compose(const charid_job* job, const char* gamma, const char* omega, char** out);

#ifdef __cplusplus
}
#endif

#endif
