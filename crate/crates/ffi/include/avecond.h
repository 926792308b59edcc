#ifndef AVECOND_H
#define AVECOND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AvecondStatus {
  AVECOND_STATUS_OK = 0,
  AVECOND_STATUS_NULL_POINTER = 1,
  AVECOND_STATUS_INVALID_ARGUMENT = 2,
  AVECOND_STATUS_DIMENSION_MISMATCH = 3,
  AVECOND_STATUS_DIMENSION_TOO_LARGE = 4,
  AVECOND_STATUS_SINGULAR = 5,
  /**
   * `[A - I, A + I]` contains a singular matrix.
   */
  AVECOND_STATUS_NOT_REGULAR = 6,
  /**
   * Preconditions of the requested formula do not hold.
   */
  AVECOND_STATUS_NOT_APPLICABLE = 7,
  AVECOND_STATUS_NO_SOLUTION = 8,
  AVECOND_STATUS_MULTIPLE_SOLUTIONS = 9,
  AVECOND_STATUS_NO_CONVERGENCE = 10,
  /**
   * Other mathematical verdicts: eigenvalue 1, not a P-matrix, zero
   * right-hand side, route disagreement.
   */
  AVECOND_STATUS_DOMAIN = 11,
  AVECOND_STATUS_PANIC = 12,
} AvecondStatus;

typedef enum AvecondNorm {
  AVECOND_NORM_ONE = 1,
  AVECOND_NORM_TWO = 2,
  AVECOND_NORM_INF = 3,
} AvecondNorm;

typedef enum AvecondKind {
  AVECOND_KIND_EXACT = 0,
  AVECOND_KIND_UPPER_BOUND = 1,
  AVECOND_KIND_LOWER_BOUND = 2,
} AvecondKind;

/**
 * Opaque square or rectangular matrix.
 */
typedef struct AvecondMatrix AvecondMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len - 1` bytes) and returns the full message length.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t avecond_last_error(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *avecond_version(void);

/**
 * Builds a `rows x cols` matrix from row-major `data`.
 *
 * # Safety
 * `data` must point to `rows * cols` readable doubles; `out` must be
 * writable. Release the handle with [`avecond_matrix_free`].
 */
enum AvecondStatus avecond_matrix_new(size_t rows,
                                      size_t cols,
                                      const double *data,
                                      struct AvecondMatrix **out);

/**
 * # Safety
 * `m` must be null or a handle from this library that is not used again.
 */
void avecond_matrix_free(struct AvecondMatrix *m);

/**
 * # Safety
 * `m` must be a valid handle; `rows` and `cols` may be null.
 */
enum AvecondStatus avecond_matrix_shape(const struct AvecondMatrix *m, size_t *rows, size_t *cols);

/**
 * Copies the entries in row-major order into `out` (`rows * cols` doubles).
 *
 * # Safety
 * `m` must be a valid handle and `out` must have room for every entry.
 */
enum AvecondStatus avecond_matrix_data(const struct AvecondMatrix *m, double *out);

/**
 * Exact `c(A)` by vertex enumeration (`n <= 20`). `scaling` is null for a
 * plain norm or points to `n` positive weights. `witness` may be null or
 * receive `n` signs.
 *
 * # Safety
 * Pointers must be null (where allowed) or valid for the stated lengths.
 */
enum AvecondStatus avecond_cond_exact(const struct AvecondMatrix *a,
                                      enum AvecondNorm norm,
                                      const double *scaling,
                                      double *value,
                                      int8_t *witness);

/**
 * Automatic method selection: exact closed form, then enumeration for
 * `n <= enum_threshold`, then the smallest applicable upper bound.
 *
 * # Safety
 * As for [`avecond_cond_exact`]; `kind` may be null.
 */
enum AvecondStatus avecond_cond_auto(const struct AvecondMatrix *a,
                                     enum AvecondNorm norm,
                                     const double *scaling,
                                     size_t enum_threshold,
                                     double *value,
                                     enum AvecondKind *kind,
                                     int8_t *witness);

/**
 * Exact regularity test. `regular` receives 1 or 0; when 0 and `witness`
 * is not null, the offending sign vector is written there (`n` entries).
 * A singular interval matrix is a verdict, not an error: the status is `Ok`.
 *
 * # Safety
 * `a` must be valid, `regular` writable, `witness` null or `n` long.
 */
enum AvecondStatus avecond_regularity(const struct AvecondMatrix *a, int *regular, int8_t *witness);

/**
 * Unique solution of `Ax - b = |x|` by sign enumeration, written to `x`.
 *
 * # Safety
 * `b` and `x` must hold `n` doubles.
 */
enum AvecondStatus avecond_solve(const struct AvecondMatrix *a, const double *b, double *x);

/**
 * `||x - x*|| <= c(A) ||Ax - b - |x|||` with the exact `c(A)`.
 * `abs_bound` and `residual_norm` may be null.
 *
 * # Safety
 * `b` and `x` must hold `n` doubles; `scaling` null or `n` long.
 */
enum AvecondStatus avecond_certify_abs(const struct AvecondMatrix *a,
                                       const double *b,
                                       const double *x,
                                       enum AvecondNorm norm,
                                       const double *scaling,
                                       double *abs_bound,
                                       double *residual_norm);

/**
 * Transforms the LCP `(M, q)` to `Ax - b = |x|`. `a_out` receives a new
 * handle (free it with [`avecond_matrix_free`]); `b_out` receives `n` doubles.
 *
 * # Safety
 * `q` and `b_out` must hold `n` doubles; `a_out` must be writable.
 */
enum AvecondStatus avecond_lcp_to_ave(const struct AvecondMatrix *m,
                                      const double *q,
                                      struct AvecondMatrix **a_out,
                                      double *b_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AVECOND_H */
