/* tyind: exact Frobenius-Schur indicators of Tambara-Yamagami categories.
 *
 * C interface to the tyind core. Handles are opaque; every call returns a
 * status code, and tyind_last_error() describes the most recent failure on
 * the calling thread. Strings returned through char** are heap-allocated
 * and must be released with tyind_string_free().
 */
#ifndef TYIND_H
#define TYIND_H

#include <stdint.h>

#if defined(_WIN32)
#define TYIND_API __declspec(dllexport)
#else
#define TYIND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tyind_status {
  TYIND_OK = 0,
  TYIND_ERR_PARSE = 1,    /* malformed group/bicharacter/argument text */
  TYIND_ERR_DOMAIN = 2,   /* precondition violated (degenerate chi, ...) */
  TYIND_ERR_BOUND = 3,    /* a configured work bound would be exceeded */
  TYIND_ERR_VERIFY = 4,   /* a verification suite found a counterexample */
  TYIND_ERR_INTERNAL = 5, /* an exact theorem identity failed: a bug */
} tyind_status;

/* A job: a group, a symmetric bicharacter on it, a sign of tau, and work
 * bounds. Operations that need the TY category require chi non-degenerate
 * and fail with TYIND_ERR_DOMAIN otherwise. */
typedef struct tyind_job tyind_job;

TYIND_API const char* tyind_version(void);

/* Message for the last failing call on this thread; never NULL. */
TYIND_API const char* tyind_last_error(void);

TYIND_API void tyind_string_free(char* s);

/* group_spec: "Z4xZ2" style. bichar_spec: "alt", "sym", "diag:1,2",
 * "cyclic:-1", "trivial", inline JSON, or NULL for the trivial form.
 * tau: "+" or "-". */
TYIND_API tyind_status tyind_job_create(const char* group_spec, const char* bichar_spec,
                                        const char* tau, tyind_job** out);
TYIND_API void tyind_job_free(tyind_job* job);

/* Overrides; pass a value <= 0 to keep the current setting. */
TYIND_API tyind_status tyind_job_set_bounds(tyind_job* job, int64_t tuple_terms,
                                            int64_t aut_scan);

TYIND_API tyind_status tyind_group_order(const tyind_job* job, int64_t* out);
TYIND_API tyind_status tyind_element_str(const tyind_job* job, int64_t index, char** out);

/* nu_n(a) for the invertible simple at the given enumeration index. */
TYIND_API tyind_status tyind_nu_element(tyind_job* job, int64_t index, int64_t n,
                                        int64_t* out);

/* nu_n(m). route: "fourier", "convolution", "closed" or "center"; NULL means
 * fourier. exact receives the canonical exact rendering. */
TYIND_API tyind_status tyind_nu_m(tyind_job* job, int64_t n, const char* route,
                                  char** exact, double* re, double* im);

/* nu_n(C) = |A[n]| + nu_n(m) sqrt(|A|). */
TYIND_API tyind_status tyind_nu_category(tyind_job* job, int64_t n, char** exact,
                                         double* re, double* im);

/* Indicator table rows (each a in A, then m, then nu(C)) for n in
 * [n_min, n_max], as JSON. */
TYIND_API tyind_status tyind_table_json(tyind_job* job, int64_t n_min, int64_t n_max,
                                        char** json_out);

/* Runs a verification suite ("fourier", "lifts", "routes", "arithmetic",
 * "center", "frobenius", "closedforms", "all"). The report JSON is always
 * produced; the status is TYIND_ERR_VERIFY when some check failed. */
TYIND_API tyind_status tyind_verify_json(tyind_job* job, const char* suite, int64_t kmax,
                                         char** json_out);

/* Simple objects of the Drinfeld center with pivotal dimension and twist. */
TYIND_API tyind_status tyind_center_json(tyind_job* job, char** json_out);

/* Fiber-functor witnesses (sigma, rho); TYIND_ERR_DOMAIN with a NotSquare
 * message when |A| is not a perfect square. */
TYIND_API tyind_status tyind_fiber_json(tyind_job* job, char** json_out);

/* Per-divisor Frobenius report for dim(C) = 2|A|. */
TYIND_API tyind_status tyind_frobenius_json(tyind_job* job, char** json_out);

/* The mu_8 certificate and the (2^r + sqrt(|A/A[k]|) xi) |A[k]| data. */
TYIND_API tyind_status tyind_certificate_json(tyind_job* job, int64_t k, char** json_out);

/* Classification sweep over all groups of the given order. */
TYIND_API tyind_status tyind_classify_json(int64_t order, int64_t tuple_terms,
                                           int64_t aut_scan, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* TYIND_H */
