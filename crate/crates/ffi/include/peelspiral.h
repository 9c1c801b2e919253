/* Copyright 2026 the Peelspiral Authors
 * SPDX-License-Identifier: Apache-2.0 */

#ifndef PEELSPIRAL_H
#define PEELSPIRAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
enum PsStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  PS_STATUS_OK = 0,
  PS_STATUS_INVALID_ARGUMENT = 1,
  PS_STATUS_OUT_OF_DOMAIN = 2,
  PS_STATUS_NON_CONVERGENCE = 3,
  PS_STATUS_NULL_POINTER = 4,
  PS_STATUS_INDEX_OUT_OF_RANGE = 5,
  PS_STATUS_PANIC = 6,
};
#ifndef __cplusplus
typedef int32_t PsStatus;
#endif // __cplusplus

/*
 Opaque convergence report.
 */
typedef struct PsConvergenceReport PsConvergenceReport;

/*
 Opaque sampled curve.
 */
typedef struct PsCurve PsCurve;

typedef struct PsQuadratureSpec {
  double abs_tol;
  double rel_tol;
  size_t max_subdivisions;
} PsQuadratureSpec;

typedef struct PsPoint {
  double x;
  double y;
} PsPoint;

typedef struct PsFrame {
  /*
   Arclength parameter.
   */
  double t;
  struct PsPoint point;
  /*
   Tangent angle (radians).
   */
  double phi;
  /*
   Signed curvature.
   */
  double kappa;
} PsFrame;

typedef struct PsConvergenceEntry {
  uint32_t windings;
  double t_rescaled;
  double abs_error;
  double rescaled_error;
} PsConvergenceEntry;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread; empty after a
 successful call. Valid until the next call on the same thread.
 */
const char *ps_last_error_message(void);

/*
 Default quadrature settings (1e-10 absolute and relative, 10^6 panels).
 */
struct PsQuadratureSpec ps_quadrature_default(void);

/*
 Fresnel integrals C(t) = ∫₀ᵗ cos u² du and S(t) = ∫₀ᵗ sin u² du.
 */
PsStatus ps_fresnel(double t, double *c, double *s);

/*
 Point (C(t), S(t)) of the Euler spiral.
 */
PsStatus ps_euler_point(double t, struct PsPoint *out);

/*
 Signed curvature 2t of the Euler spiral.
 */
double ps_euler_curvature(double t);

/*
 Limit point for `sign` = +1 or -1.
 */
PsStatus ps_limit_point(int32_t sign, struct PsPoint *out);

/*
 Height t/(2πN) on the sphere.
 */
PsStatus ps_peel_height(double windings, double t, double *out);

/*
 Signed curvature t/√((2πN)² − t²) of the flattened peel.
 */
PsStatus ps_peel_curvature(double windings, double t, double *out);

/*
 Tangent angle −√((2πN)² − t²) of the flattened peel.
 */
PsStatus ps_peel_phase(double windings, double t, double *out);

/*
 Point z(t) of the flattened peel. `spec` may be null for defaults.
 */
PsStatus ps_peel_point(double windings,
                       double t,
                       const struct PsQuadratureSpec *spec,
                       struct PsPoint *out);

/*
 Sample the peel at `samples` uniform parameters. Free with `ps_curve_free`.
 */
PsStatus ps_sample_peel(double windings,
                        size_t samples,
                        const struct PsQuadratureSpec *spec,
                        struct PsCurve **out);

/*
 Sample the Euler spiral over [t_min, t_max]. Free with `ps_curve_free`.
 */
PsStatus ps_sample_euler(double t_min, double t_max, size_t samples, struct PsCurve **out);

/*
 Clothoid transition with curvature `rate · s` over arclength `length`.
 */
PsStatus ps_clothoid_transition(double rate, double length, size_t samples, struct PsCurve **out);

/*
 Number of frames in `curve` (0 for null).
 */
size_t ps_curve_len(const struct PsCurve *curve);

/*
 Copy frame `index` of `curve` into `out`.
 */
PsStatus ps_curve_frame(const struct PsCurve *curve, size_t index, struct PsFrame *out);

/*
 Release a curve handle. Null is ignored.
 */
void ps_curve_free(struct PsCurve *curve);

/*
 Grid-maximum distance between the peel of width 1/N and the rescaled
 Euler spiral over [−√(4πN)T, √(4πN)T].
 */
PsStatus ps_sup_error(uint32_t windings,
                      double t_rescaled,
                      size_t samples,
                      const struct PsQuadratureSpec *spec,
                      double *absolute,
                      double *rescaled);

/*
 Leading-order error estimate |t|⁵ / (40·(2πN)³).
 */
double ps_error_estimate(double t, uint32_t windings);

/*
 Convergence study over `count` winding counts. Free with `ps_report_free`.
 */
PsStatus ps_convergence_study(const uint32_t *windings,
                              size_t count,
                              double t_rescaled,
                              size_t samples,
                              const struct PsQuadratureSpec *spec,
                              struct PsConvergenceReport **out);

/*
 Number of entries in `report` (0 for null).
 */
size_t ps_report_len(const struct PsConvergenceReport *report);

/*
 Fitted log-log slope of rescaled error against N (NaN for null).
 */
double ps_report_slope(const struct PsConvergenceReport *report);

PsStatus ps_report_entry(const struct PsConvergenceReport *report,
                         size_t index,
                         struct PsConvergenceEntry *out);

/*
 Release a report handle. Null is ignored.
 */
void ps_report_free(struct PsConvergenceReport *report);

/*
 Squared chord between spiral parameters `t1 <= t2`; pass -INFINITY /
 INFINITY for the limit points.
 */
PsStatus ps_slit_intensity(double t1, double t2, double *out);

/*
 Area 2π(h2 − h1) of a sphere zone.
 */
PsStatus ps_strip_area(double h1, double h2, double *out);

/*
 Circumference 2π√(1 − s²) of the parallel at height `s`.
 */
PsStatus ps_parallel_perimeter(double s, double *out);

/*
 Surface width ε/√(1 − s²) of a thin zone at height `s`.
 */
PsStatus ps_strip_width(double s, double eps, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PEELSPIRAL_H */
