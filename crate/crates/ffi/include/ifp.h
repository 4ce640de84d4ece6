#ifndef IFP_H
#define IFP_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. The first four match the `ifp` command's exit statuses.
 */
typedef enum IfpStatus {
  IFP_STATUS_OK = 0,
  IFP_STATUS_VALIDATION = 1,
  IFP_STATUS_PARSE = 2,
  IFP_STATUS_DOMAIN = 3,
  IFP_STATUS_NULL_ARGUMENT = 4,
  IFP_STATUS_INVALID_UTF8 = 5,
  IFP_STATUS_PANIC = 6,
  IFP_STATUS_OUT_OF_RANGE = 7,
} IfpStatus;

/**
 * An Ω-set.
 */
typedef struct IfpOmegaSet IfpOmegaSet;

/**
 * The outcome of a decision, with NUL-terminated copies of the labels.
 */
typedef struct IfpReport IfpReport;

/**
 * Scalar results of a decision. Indices refer to universe order.
 */
typedef struct IfpDecisionSummary {
  size_t max_u;
  double max_mu;
  size_t min_v;
  double min_nu;
  double alpha;
  double beta;
  double alpha_prime;
  double beta_prime;
  size_t opportune;
  /**
   * Set when any selection step had to break a tie.
   */
  bool tie;
} IfpDecisionSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next `ifp_*` call on the same thread.
 */
const char *ifp_last_error(void);

/**
 * Library version as a static string.
 */
const char *ifp_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void ifp_string_free(char *s);

/**
 * Parses a problem file (JSON text). With `relaxed`, parameters outside the
 * parameter set may have non-empty approximations.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum IfpStatus ifp_omega_from_json(const char *json, bool relaxed, struct IfpOmegaSet **out);

/**
 * Serializes in the problem-file format.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum IfpStatus ifp_omega_to_json(const struct IfpOmegaSet *set, char **out);

/**
 * # Safety
 * `set` must be NULL or a handle from this library that has not been freed.
 */
void ifp_omega_free(struct IfpOmegaSet *set);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_omega_union(const struct IfpOmegaSet *a,
                               const struct IfpOmegaSet *b,
                               struct IfpOmegaSet **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_omega_intersection(const struct IfpOmegaSet *a,
                                      const struct IfpOmegaSet *b,
                                      struct IfpOmegaSet **out);

/**
 * The result is relaxed.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum IfpStatus ifp_omega_complement(const struct IfpOmegaSet *a, struct IfpOmegaSet **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_omega_subset(const struct IfpOmegaSet *a,
                                const struct IfpOmegaSet *b,
                                bool *out);

/**
 * Equality within the library tolerance (1e-9).
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_omega_equal(const struct IfpOmegaSet *a, const struct IfpOmegaSet *b, bool *out);

/**
 * ∧-product of the approximations, as JSON in the paired format.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_and_product_json(const struct IfpOmegaSet *a,
                                    const struct IfpOmegaSet *b,
                                    char **out);

/**
 * ∨-product of the approximations, as JSON in the paired format.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum IfpStatus ifp_or_product_json(const struct IfpOmegaSet *a,
                                   const struct IfpOmegaSet *b,
                                   char **out);

/**
 * Aggregates the Ω-set and selects the opportune alternative.
 *
 * # Safety
 * `set` must be a live handle; `out` must be writable.
 */
enum IfpStatus ifp_decide(const struct IfpOmegaSet *set, struct IfpReport **out);

/**
 * # Safety
 * `report` must be NULL or a handle from [`ifp_decide`] that has not been freed.
 */
void ifp_report_free(struct IfpReport *report);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum IfpStatus ifp_report_summary(const struct IfpReport *report, struct IfpDecisionSummary *out);

/**
 * Number of alternatives in the report.
 *
 * # Safety
 * `report` must be NULL or a live handle.
 */
size_t ifp_report_len(const struct IfpReport *report);

/**
 * Label of alternative `index`, or NULL when out of range. Borrowed from the
 * report; valid until it is freed.
 *
 * # Safety
 * `report` must be NULL or a live handle.
 */
const char *ifp_report_label(const struct IfpReport *report, size_t index);

/**
 * Aggregate degrees `(mu*, nu*)` of alternative `index`.
 *
 * # Safety
 * `report` must be a live handle; `mu` and `nu` must be writable.
 */
enum IfpStatus ifp_report_aggregate_at(const struct IfpReport *report,
                                       size_t index,
                                       double *mu,
                                       double *nu);

/**
 * The machine-format report with display columns at `precision` decimals.
 *
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
enum IfpStatus ifp_report_to_json(const struct IfpReport *report, uint32_t precision, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IFP_H */
