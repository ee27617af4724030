#ifndef CASIMIR_H
#define CASIMIR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Treatment of the longitudinal-momentum integral.
 */
typedef enum CasimirAlphaVariant {
  CASIMIR_ALPHA_VARIANT_EXACT = 0,
  CASIMIR_ALPHA_VARIANT_QUADRATIC = 1,
  CASIMIR_ALPHA_VARIANT_EXP_FIT = 2,
  CASIMIR_ALPHA_VARIANT_UNBOUNDED = 3,
} CasimirAlphaVariant;

typedef enum CasimirBoundary {
  CASIMIR_BOUNDARY_DIRICHLET = 0,
  CASIMIR_BOUNDARY_NEUMANN = 1,
} CasimirBoundary;

/**
 * Result code of every call.
 */
typedef enum CasimirStatus {
  CASIMIR_STATUS_OK = 0,
  CASIMIR_STATUS_NULL_POINTER = 1,
  CASIMIR_STATUS_INVALID_ARGUMENT = 2,
  CASIMIR_STATUS_DOMAIN = 3,
  CASIMIR_STATUS_UNSUPPORTED_ORDER = 4,
  CASIMIR_STATUS_BRACKET_FAILURE = 5,
  CASIMIR_STATUS_OVERFLOW = 6,
  CASIMIR_STATUS_NO_STATIONARY_POINT = 7,
  CASIMIR_STATUS_DIVERGENT_CURVATURE = 8,
  CASIMIR_STATUS_NON_FINITE = 9,
  CASIMIR_STATUS_INSUFFICIENT_DATA = 10,
  CASIMIR_STATUS_INVALID_PLAN = 11,
  CASIMIR_STATUS_UNSUPPORTED_VARIANT = 12,
  CASIMIR_STATUS_QUADRATURE = 13,
  CASIMIR_STATUS_TAIL_NOT_CONVERGED = 14,
  CASIMIR_STATUS_PANIC = 15,
} CasimirStatus;

typedef enum CasimirZeroKind {
  CASIMIR_ZERO_KIND_FUNCTION = 0,
  CASIMIR_ZERO_KIND_DERIVATIVE = 1,
} CasimirZeroKind;

/**
 * Opaque cylinder result.
 */
typedef struct CasimirCylinder CasimirCylinder;

/**
 * Opaque series plan.
 */
typedef struct CasimirPlan CasimirPlan;

/**
 * Sphere coefficient in units of hbar c / R.
 */
typedef struct CasimirSphereEnergy {
  double diameter_sum;
  double generic_sum;
  double total;
  double tail_error;
  size_t explicit_terms;
} CasimirSphereEnergy;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *casimir_status_message(enum CasimirStatus status);

/**
 * Message for the last failing call on this thread. Valid until the next
 * failing call on the same thread.
 */
const char *casimir_last_error(void);

/**
 * Create a series plan. Release with [`casimir_plan_free`].
 *
 * # Safety
 * `out` must be null or writable.
 */
enum CasimirStatus casimir_plan_new(size_t explicit_terms,
                                    size_t richardson_order,
                                    double tolerance,
                                    struct CasimirPlan **out);

/**
 * Release a plan. Null is ignored.
 *
 * # Safety
 * `plan` must be null or come from [`casimir_plan_new`] and not be freed twice.
 */
void casimir_plan_free(struct CasimirPlan *plan);

/**
 * Sphere coefficient. `plan` may be null for the default plan.
 *
 * # Safety
 * `plan` must be null or a live plan; `out` must be writable.
 */
enum CasimirStatus casimir_sphere_energy(const struct CasimirPlan *plan,
                                         struct CasimirSphereEnergy *out);

/**
 * Cylinder coefficient per unit length. `plan` may be null. Release the
 * result with [`casimir_cylinder_free`].
 *
 * # Safety
 * `plan` must be null or a live plan; `out` must be writable.
 */
enum CasimirStatus casimir_cylinder_energy(const struct CasimirPlan *plan,
                                           enum CasimirAlphaVariant alpha,
                                           struct CasimirCylinder **out);

/**
 * # Safety
 * `result` must be a live cylinder handle.
 */
double casimir_cylinder_total(const struct CasimirCylinder *result);

/**
 * # Safety
 * `result` must be a live cylinder handle.
 */
double casimir_cylinder_series(const struct CasimirCylinder *result);

/**
 * # Safety
 * `result` must be a live cylinder handle.
 */
double casimir_cylinder_alpha_factor(const struct CasimirCylinder *result);

/**
 * Number of explicit per-n series terms held by the result.
 *
 * # Safety
 * `result` must be a live cylinder handle.
 */
size_t casimir_cylinder_term_count(const struct CasimirCylinder *result);

/**
 * Series term for `n` (1-based).
 *
 * # Safety
 * `result` must be a live cylinder handle; `out` must be writable.
 */
enum CasimirStatus casimir_cylinder_term(const struct CasimirCylinder *result,
                                         size_t n,
                                         double *out);

/**
 * Release a cylinder result. Null is ignored.
 *
 * # Safety
 * `result` must be null or come from [`casimir_cylinder_energy`] and not be freed twice.
 */
void casimir_cylinder_free(struct CasimirCylinder *result);

/**
 * WKB zero `x_{ell,n}` of the radial quantisation condition.
 *
 * # Safety
 * `out` must be writable.
 */
enum CasimirStatus casimir_wkb_zero(uint32_t ell, uint32_t n, enum CasimirBoundary bc, double *out);

/**
 * `k`-th zero of `J_order` or `J'_order` (the origin counts for `J'_0`).
 *
 * # Safety
 * `out` must be writable.
 */
enum CasimirStatus casimir_bessel_j_zero(uint32_t order,
                                         uint32_t k,
                                         enum CasimirZeroKind kind,
                                         double *out);

/**
 * `int_0^1 exp(-x sqrt(1 - a^2)) da` or one of its approximants.
 *
 * # Safety
 * `out` must be writable.
 */
enum CasimirStatus casimir_alpha_integral(double x, enum CasimirAlphaVariant alpha, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CASIMIR_H */
