#ifndef HERMOPS_H
#define HERMOPS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum HermopsStatus {
  HERMOPS_STATUS_OK = 0,
  /**
   * Malformed input: bad rational, non positive-definite form, unknown check id.
   */
  HERMOPS_STATUS_INVALID_ARGUMENT = 1,
  HERMOPS_STATUS_NULL_POINTER = 2,
  /**
   * An operator image left the finite space it was restricted to.
   */
  HERMOPS_STATUS_DEGREE_OVERFLOW = 3,
  /**
   * Operands live on different numbers of variables.
   */
  HERMOPS_STATUS_VARIABLE_MISMATCH = 4,
  HERMOPS_STATUS_INTERNAL = 5,
} HermopsStatus;

/**
 * Which index pairs with `x` in the `u_{n,m}` basis.
 */
typedef enum HermopsConvention {
  HERMOPS_CONVENTION_N_WITH_X = 0,
  HERMOPS_CONVENTION_M_WITH_X = 1,
} HermopsConvention;

/**
 * Opaque normal-ordered differential operator.
 */
typedef struct HermopsOp HermopsOp;

/**
 * Opaque polynomial in one or two variables with exact coefficients.
 */
typedef struct HermopsPoly HermopsPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *hermops_last_error(void);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void hermops_string_free(char *s);

/**
 * Probabilists' Hermite polynomial `He_n`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum HermopsStatus hermops_poly_hermite(uint32_t n, struct HermopsPoly **out);

/**
 * Bivariate Hermite polynomial for the form given as `"sqrt_a,b,sqrt_c"`.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string; `out` must be writable.
 */
enum HermopsStatus hermops_poly_bivariate_hermite(uint32_t n,
                                                  uint32_t m,
                                                  const char *lambda,
                                                  struct HermopsPoly **out);

/**
 * The monomial-basis polynomial `u_{n,m}` under the given index pairing.
 *
 * # Safety
 * `lambda` must be a NUL-terminated string; `out` must be writable.
 */
enum HermopsStatus hermops_poly_u(uint32_t n,
                                  uint32_t m,
                                  const char *lambda,
                                  enum HermopsConvention convention,
                                  struct HermopsPoly **out);

/**
 * Legendre polynomial `P_n` from the Rodrigues formula.
 *
 * # Safety
 * `out` must be writable.
 */
enum HermopsStatus hermops_poly_legendre(uint32_t n, struct HermopsPoly **out);

/**
 * Laguerre polynomial `L_n` from the Rodrigues formula.
 *
 * # Safety
 * `out` must be writable.
 */
enum HermopsStatus hermops_poly_laguerre(uint32_t n, struct HermopsPoly **out);

/**
 * `{"nvars": k, "terms": [{"xdeg", "ydeg", "coeff"}]}` with coefficients
 * as exact rational strings, terms in ascending `(xdeg, ydeg)` order.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable. Free the result with
 * `hermops_string_free`.
 */
enum HermopsStatus hermops_poly_to_json(const struct HermopsPoly *p, char **out);

/**
 * # Safety
 * `p` must be null or a handle not yet freed.
 */
void hermops_poly_free(struct HermopsPoly *p);

/**
 * Zero operator on `nvars` (1 or 2) variables.
 *
 * # Safety
 * `out` must be writable.
 */
enum HermopsStatus hermops_op_new(uint8_t nvars, struct HermopsOp **out);

/**
 * Adds `coeff * x^x y^y ∂x^dx ∂y^dy`; `coeff` is an exact rational such as `"-3/4"`.
 *
 * # Safety
 * `op` must be a live handle and `coeff` a NUL-terminated string.
 */
enum HermopsStatus hermops_op_add_term(struct HermopsOp *op,
                                       uint32_t x,
                                       uint32_t y,
                                       uint32_t dx,
                                       uint32_t dy,
                                       const char *coeff);

/**
 * Normal-ordered product `a * b`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HermopsStatus hermops_op_mul(const struct HermopsOp *a,
                                  const struct HermopsOp *b,
                                  struct HermopsOp **out);

/**
 * `[a, b] = ab - ba`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum HermopsStatus hermops_op_commutator(const struct HermopsOp *a,
                                         const struct HermopsOp *b,
                                         struct HermopsOp **out);

/**
 * Applies the operator to a polynomial.
 *
 * # Safety
 * `op` and `p` must be live handles; `out` must be writable.
 */
enum HermopsStatus hermops_op_apply(const struct HermopsOp *op,
                                    const struct HermopsPoly *p,
                                    struct HermopsPoly **out);

/**
 * Human-readable normal-ordered form.
 *
 * # Safety
 * `op` must be a live handle; `out` must be writable. Free the result with
 * `hermops_string_free`.
 */
enum HermopsStatus hermops_op_to_string(const struct HermopsOp *op, char **out);

/**
 * # Safety
 * `op` must be null or a handle not yet freed.
 */
void hermops_op_free(struct HermopsOp *op);

/**
 * Runs a verification check (or `"all"`) and writes the JSON report.
 * `config_json` may be null for defaults; otherwise it is an object with
 * the same keys as the command-line flags (`n`, `lambda`, `precision`, ...).
 * `all_passed` may be null. A failing verdict is not an error: the call
 * still returns `HERMOPS_STATUS_OK` and reports it through `all_passed`.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out_json` must be writable.
 */
enum HermopsStatus hermops_check(const char *check_id,
                                 const char *config_json,
                                 char **out_json,
                                 bool *all_passed_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HERMOPS_H */
