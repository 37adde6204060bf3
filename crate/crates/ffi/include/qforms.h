#ifndef QFORMS_H
#define QFORMS_H

#include <stdbool.h>
#include <stdint.h>

typedef enum QfStatus {
  QF_STATUS_OK = 0,
  QF_STATUS_NULL_POINTER = 1,
  QF_STATUS_INVALID_ARGUMENT = 2,
  QF_STATUS_UNKNOWN_ID = 3,
  QF_STATUS_ORDER_MISMATCH = 4,
  QF_STATUS_OUT_OF_RANGE = 5,
  QF_STATUS_PANIC = 6,
} QfStatus;

// Result of a classification scan.
typedef struct QfClassification QfClassification;

// Truncated integer power series.
typedef struct QfSeries QfSeries;

// Message for the last non-OK status on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *qf_last_error_message(void);

// Static description of a status code.
const char *qf_status_str(enum QfStatus status);

// # Safety
// `out` must be null or valid for writes.
enum QfStatus qf_count_hex(uint64_t n, uint64_t *out);

// Representations of `n` by `a x^2 + c (y^2 + yz + z^2)`.
//
// # Safety
// `out` must be null or valid for writes.
enum QfStatus qf_count_ternary_mixed(uint64_t a, uint64_t c, uint64_t n, uint64_t *out);

// Representations of `n` by `a x^2 + b y^2 + c (z^2 + zw + w^2)`. `a` and
// `b` may come in either order.
//
// # Safety
// `out` must be null or valid for writes.
enum QfStatus qf_count_quaternary(uint64_t a, uint64_t b, uint64_t c, uint64_t n, uint64_t *out);

// # Safety
// `out` must be null or valid for writes. Free the result with
// `qf_series_free`.
enum QfStatus qf_series_phi(uint64_t order, struct QfSeries **out);

// # Safety
// See `qf_series_phi`.
enum QfStatus qf_series_psi(uint64_t order, struct QfSeries **out);

// # Safety
// See `qf_series_phi`.
enum QfStatus qf_series_hex(uint64_t order, struct QfSeries **out);

// # Safety
// `series` must be null or a live handle; `out` must be null or valid for
// writes.
enum QfStatus qf_series_order(const struct QfSeries *series, uint64_t *out);

// Coefficient of `q^n`.
//
// # Safety
// Same as `qf_series_order`.
enum QfStatus qf_series_coeff(const struct QfSeries *series, uint64_t n, int64_t *out);

// # Safety
// `x`, `y` must be null or live handles; `out` null or valid for writes.
enum QfStatus qf_series_add(const struct QfSeries *x,
                            const struct QfSeries *y,
                            struct QfSeries **out);

// Truncated product.
//
// # Safety
// See `qf_series_add`.
enum QfStatus qf_series_mul(const struct QfSeries *x,
                            const struct QfSeries *y,
                            struct QfSeries **out);

// `k * x`.
//
// # Safety
// `x` must be null or a live handle; `out` null or valid for writes.
enum QfStatus qf_series_scale(int64_t k, const struct QfSeries *x, struct QfSeries **out);

// `q^k * x`.
//
// # Safety
// See `qf_series_scale`.
enum QfStatus qf_series_shift(uint64_t k, const struct QfSeries *x, struct QfSeries **out);

// `x(q^m)`, `m >= 1`.
//
// # Safety
// See `qf_series_scale`.
enum QfStatus qf_series_substitute_power(uint64_t m,
                                         const struct QfSeries *x,
                                         struct QfSeries **out);

// # Safety
// `series` must be null or a handle not yet freed.
void qf_series_free(struct QfSeries *series);

// Whether `n` is in the exclusion set of `lemma` (e.g. "P11", "L1412").
//
// # Safety
// `lemma` must be null or a NUL-terminated string; `out` null or valid for
// writes.
enum QfStatus qf_excluded_for(const char *lemma, uint64_t n, bool *out);

// Checks a lemma up to `bound`. Writes the number of disagreeing `n` and
// the smallest one (`UINT64_MAX` when there are none).
//
// # Safety
// `lemma` must be null or a NUL-terminated string; out pointers null or
// valid for writes.
enum QfStatus qf_verify_lemma(const char *lemma,
                              uint64_t bound,
                              uint64_t *discrepancies,
                              uint64_t *first_discrepancy);

// Checks `"base"` or one of `"C1a"`, `"C1b"`, `"C3"`, `"C4"` to `order`.
// `verified` is true when every check holds (and, for relations, both
// routes agree).
//
// # Safety
// `case_id` must be null or a NUL-terminated string; `verified` null or
// valid for writes.
enum QfStatus qf_verify_identities(const char *case_id, uint64_t order, bool *verified);

// Smallest `n <= bound` not represented by the quaternary form. `found`
// is false when there is none.
//
// # Safety
// Out pointers must be null or valid for writes.
enum QfStatus qf_first_gap(uint64_t a,
                           uint64_t b,
                           uint64_t c,
                           uint64_t bound,
                           bool *found,
                           uint64_t *gap);

// Smallest `n <= bound` not represented by `a x^2 + c (y^2 + yz + z^2)`.
//
// # Safety
// Out pointers must be null or valid for writes.
enum QfStatus qf_ternary_first_gap(uint64_t a,
                                   uint64_t c,
                                   uint64_t bound,
                                   bool *found,
                                   uint64_t *gap);

// Whether the form represents 1, 2, 3, 5, 6 and 10. On failure `witness`
// is the smallest of them that is missed, otherwise 0.
//
// # Safety
// Out pointers must be null or valid for writes.
enum QfStatus qf_escalator(uint64_t a, uint64_t b, uint64_t c, bool *passed, uint64_t *witness);

// Classifies the box `a <= a_max`, `a <= b <= b_max`, `c <= c_max`.
//
// # Safety
// `out` must be null or valid for writes. Free the result with
// `qf_classification_free`.
enum QfStatus qf_classify(uint64_t a_max,
                          uint64_t b_max,
                          uint64_t c_max,
                          uint64_t bound,
                          struct QfClassification **out);

// Number of universal triples found.
//
// # Safety
// `report` must be null or a live handle; `out` null or valid for writes.
enum QfStatus qf_classification_len(const struct QfClassification *report, uint64_t *out);

// The `index`-th universal triple, ordered by `(c, a, b)`.
//
// # Safety
// `report` must be null or a live handle; out pointers null or valid for
// writes.
enum QfStatus qf_classification_get(const struct QfClassification *report,
                                    uint64_t index,
                                    uint64_t *a,
                                    uint64_t *b,
                                    uint64_t *c);

// Number of triples where the scan and the escalator test disagree.
//
// # Safety
// See `qf_classification_len`.
enum QfStatus qf_classification_violations(const struct QfClassification *report, uint64_t *out);

// # Safety
// `report` must be null or a handle not yet freed.
void qf_classification_free(struct QfClassification *report);

#endif  /* QFORMS_H */
