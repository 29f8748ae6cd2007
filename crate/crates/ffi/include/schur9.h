#ifndef SCHUR9_H
#define SCHUR9_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Schur9Status {
  /**
   * The call succeeded; for verifications, both sides agreed.
   */
  SCHUR9_STATUS_OK = 0,
  /**
   * A verification ran and the two sides differ.
   */
  SCHUR9_STATUS_DIFFERENT = 1,
  /**
   * Bad shape, strip or name.
   */
  SCHUR9_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A required pointer was null or a string was not UTF-8.
   */
  SCHUR9_STATUS_NULL_POINTER = 3,
  /**
   * Internal failure; the library caught a panic.
   */
  SCHUR9_STATUS_INTERNAL = 4,
} Schur9Status;

/**
 * An exact polynomial with integer coefficients.
 */
typedef struct Schur9Poly Schur9Poly;

/**
 * Result of one verification.
 */
typedef struct Schur9Report Schur9Report;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or null. The pointer
 * stays valid until the next call on the same thread.
 */
const char *schur9_last_error(void);

/**
 * Library version as a static string.
 */
const char *schur9_version(void);

/**
 * Verifies the decomposition identity for λ/μ cut by `strip`
 * (`row`, `col`, `hook`, `hook@M`, `inner`, `outer` or `profile:<cmin>:<EN...>`).
 * Partitions are comma separated; `mu` and `strip` may be null.
 *
 * # Safety
 * String arguments must be null or point to NUL-terminated strings; `out`
 * must be a valid pointer. On success `*out` holds a report to free with
 * [`schur9_report_free`].
 */
enum Schur9Status schur9_verify(const char *lambda,
                                const char *mu,
                                const char *strip,
                                uint32_t n,
                                bool qfun,
                                bool perturb,
                                struct Schur9Report **out);

/**
 * Runs a named corollary such as `jt`, `okada-inner` or `q-outer`.
 *
 * # Safety
 * As for [`schur9_verify`].
 */
enum Schur9Status schur9_corollary(const char *name,
                                   const char *lambda,
                                   const char *mu,
                                   uint32_t n,
                                   struct Schur9Report **out);

/**
 * Whether both sides of the report agree. False for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
bool schur9_report_equal(const struct Schur9Report *report);

/**
 * The report as JSON, without timings. Free with [`schur9_string_free`].
 *
 * # Safety
 * `report` must be null or a live report.
 */
char *schur9_report_json(const struct Schur9Report *report);

/**
 * Copies of the two sides of a report. Either out pointer may be null.
 *
 * # Safety
 * `report` must be a live report; non-null out pointers must be valid.
 */
enum Schur9Status schur9_report_sides(const struct Schur9Report *report,
                                      struct Schur9Poly **lhs,
                                      struct Schur9Poly **rhs);

/**
 * # Safety
 * `report` must be null or a report not yet freed.
 */
void schur9_report_free(struct Schur9Report *report);

/**
 * The tableau sum for λ/μ in `n` levels: a skew Schur function, or a
 * Q-function of the shifted shape when `qfun` is set.
 *
 * # Safety
 * String arguments must be null (for `mu`) or NUL-terminated; `out` must be
 * valid. Free the result with [`schur9_poly_free`].
 */
enum Schur9Status schur9_tableau_sum(const char *lambda,
                                     const char *mu,
                                     uint32_t n,
                                     bool qfun,
                                     struct Schur9Poly **out);

/**
 * Number of monomials with non-zero coefficient.
 *
 * # Safety
 * `poly` must be null or a live polynomial.
 */
size_t schur9_poly_num_terms(const struct Schur9Poly *poly);

/**
 * # Safety
 * Both arguments must be null or live polynomials.
 */
bool schur9_poly_equal(const struct Schur9Poly *a, const struct Schur9Poly *b);

/**
 * Text form of the polynomial. Free with [`schur9_string_free`].
 *
 * # Safety
 * `poly` must be null or a live polynomial.
 */
char *schur9_poly_to_string(const struct Schur9Poly *poly);

/**
 * # Safety
 * `poly` must be null or a polynomial not yet freed.
 */
void schur9_poly_free(struct Schur9Poly *poly);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void schur9_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHUR9_H */
