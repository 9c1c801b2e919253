// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Adaptive Gauss–Kronrod quadrature for real and complex integrands.
//!
//! Every panel is evaluated with the 15-point Kronrod rule and its embedded
//! 7-point Gauss rule; their difference is the panel error estimate. The
//! panel with the largest estimate is bisected until the summed estimate
//! meets `max(abs_tol, rel_tol * |value|)`. Ties are broken towards the
//! panel with the smaller lower bound, and the final value is summed in
//! order of increasing lower bound, so results are bit-reproducible.
//!
//! A panel whose Kronrod/Gauss difference is below `50·ε·∫|f|` counts as
//! resolved and is never split again. If every panel is resolved the result
//! is returned even when the requested tolerance lies below that rounding
//! floor; `error_estimate` then reports the floor.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::TAU;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use thiserror::Error;

/// Kronrod abscissae on [-1, 1] (non-negative half, descending).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Gauss weights belonging to `XGK[1]`, `XGK[3]`, `XGK[5]` and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Panels whose Kronrod/Gauss difference is below this multiple of
/// `eps * integral(|f|)` are considered resolved to rounding level.
const ROUNDOFF_FACTOR: f64 = 50.0;

/// Accuracy and effort limits for one integration request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 1_000_000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_subdivisions: usize,
    ) -> Result<Self, QuadratureError> {
        let spec = QuadratureSpec {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), QuadratureError> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(QuadratureError::InvalidRequest(format!(
                "abs_tol must be positive and finite, got {}",
                self.abs_tol
            )));
        }
        if !(self.rel_tol >= 0.0 && self.rel_tol.is_finite()) {
            return Err(QuadratureError::InvalidRequest(format!(
                "rel_tol must be non-negative and finite, got {}",
                self.rel_tol
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(QuadratureError::InvalidRequest(
                "max_subdivisions must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn tolerance(&self, value_norm: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value_norm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<V> {
    pub value: V,
    pub error_estimate: f64,
    /// Number of panels in the final partition.
    pub subdivisions_used: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("integrand is not finite at u = {at}")]
    NonFinite { at: f64 },
    #[error(
        "no convergence within {subdivisions} subdivisions \
         (best estimate {estimate}, error bound {error_bound:e})"
    )]
    NonConvergence {
        estimate: Complex64,
        error_bound: f64,
        subdivisions: usize,
    },
    #[error("invalid quadrature request: {0}")]
    InvalidRequest(String),
}

/// Values an integrand may return.
pub trait Integrand:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn norm(self) -> f64;
    fn is_finite(self) -> bool;
    fn to_complex(self) -> Complex64;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel<V> {
    lo: f64,
    hi: f64,
    value: V,
    error: f64,
    resolved: bool,
}

/// Heap entry: largest error first, then smaller lower bound.
#[derive(Debug, Clone, Copy)]
struct Pending {
    error: f64,
    lo: f64,
    index: usize,
}

impl PartialEq for Pending {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pending {}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.lo.total_cmp(&self.lo))
            .then_with(|| other.index.cmp(&self.index))
    }
}

fn sample<V: Integrand, F: Fn(f64) -> V>(f: &F, x: f64) -> Result<V, QuadratureError> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(QuadratureError::NonFinite { at: x })
    }
}

fn kronrod15<V: Integrand, F: Fn(f64) -> V>(
    f: &F,
    lo: f64,
    hi: f64,
) -> Result<Panel<V>, QuadratureError> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let f_center = sample(f, center)?;
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut abs_sum = f_center.norm() * WGK[7];
    for (j, (&x, &wk)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let f1 = sample(f, center - dx)?;
        let f2 = sample(f, center + dx)?;
        let pair = f1 + f2;
        kronrod = kronrod + pair * wk;
        abs_sum += wk * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss = gauss + pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let diff = ((kronrod - gauss) * half).norm();
    let floor = ROUNDOFF_FACTOR * f64::EPSILON * abs_sum * half.abs();
    let resolved = diff <= floor;
    Ok(Panel {
        lo,
        hi,
        value,
        error: diff.max(floor),
        resolved,
    })
}

fn ordered_sum<V: Integrand>(panels: &mut [Panel<V>]) -> (V, f64) {
    panels.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    panels
        .iter()
        .fold((V::zero(), 0.0), |(v, e), p| (v + p.value, e + p.error))
}

/// Adaptive integration starting from the given ordered panel boundaries.
fn adaptive<V: Integrand, F: Fn(f64) -> V>(
    f: &F,
    boundaries: &[f64],
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<V>, QuadratureError> {
    let initial = boundaries.len().saturating_sub(1);
    if initial > spec.max_subdivisions {
        return Err(QuadratureError::NonConvergence {
            estimate: Complex64::new(f64::NAN, f64::NAN),
            error_bound: f64::INFINITY,
            subdivisions: initial,
        });
    }
    let mut panels: Vec<Panel<V>> = Vec::with_capacity(initial.max(1) * 2);
    let mut heap = BinaryHeap::new();
    let mut total = V::zero();
    let mut total_error = 0.0;
    for w in boundaries.windows(2) {
        let panel = kronrod15(f, w[0], w[1])?;
        total = total + panel.value;
        total_error += panel.error;
        if !panel.resolved {
            heap.push(Pending {
                error: panel.error,
                lo: panel.lo,
                index: panels.len(),
            });
        }
        panels.push(panel);
    }

    loop {
        if total_error <= spec.tolerance(total.norm()) {
            break;
        }
        let Some(next) = heap.pop() else {
            // Every panel is resolved to rounding level; no bisection can
            // improve the estimate, so report it with its rounding bound.
            break;
        };
        let parent = panels[next.index];
        let mid = 0.5 * (parent.lo + parent.hi);
        if panels.len() + 1 > spec.max_subdivisions || !(parent.lo < mid && mid < parent.hi) {
            let (value, error) = ordered_sum(&mut panels);
            return Err(QuadratureError::NonConvergence {
                estimate: value.to_complex(),
                error_bound: error,
                subdivisions: panels.len(),
            });
        }
        let left = kronrod15(f, parent.lo, mid)?;
        let right = kronrod15(f, mid, parent.hi)?;
        total = total - parent.value + left.value + right.value;
        total_error += left.error + right.error - parent.error;
        panels[next.index] = left;
        if !left.resolved {
            heap.push(Pending {
                error: left.error,
                lo: left.lo,
                index: next.index,
            });
        }
        if !right.resolved {
            heap.push(Pending {
                error: right.error,
                lo: right.lo,
                index: panels.len(),
            });
        }
        panels.push(right);
    }

    let (value, error) = ordered_sum(&mut panels);
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        subdivisions_used: panels.len(),
    })
}

fn check_interval(lo: f64, hi: f64) -> Result<(), QuadratureError> {
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(QuadratureError::InvalidRequest(format!(
            "interval bounds must be finite, got [{lo}, {hi}]"
        )));
    }
    if lo > hi {
        return Err(QuadratureError::InvalidRequest(format!(
            "lower bound {lo} exceeds upper bound {hi}"
        )));
    }
    Ok(())
}

/// Integrate `f` over `[lo, hi]`.
pub fn integrate<V, F>(
    f: F,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<V>, QuadratureError>
where
    V: Integrand,
    F: Fn(f64) -> V,
{
    spec.validate()?;
    check_interval(lo, hi)?;
    if lo == hi {
        return Ok(QuadratureResult {
            value: V::zero(),
            error_estimate: 0.0,
            subdivisions_used: 0,
        });
    }
    adaptive(&f, &[lo, hi], spec)
}

/// Split `[lo, hi]` into panels across which `phase` changes by at most one
/// period (checked at both ends and the midpoint of every panel).
pub fn phase_panels<P, R>(
    phase: P,
    phase_rate: R,
    lo: f64,
    hi: f64,
    max_panels: usize,
) -> Result<Vec<f64>, QuadratureError>
where
    P: Fn(f64) -> f64,
    R: Fn(f64) -> f64,
{
    let eval = |x: f64| -> Result<f64, QuadratureError> {
        let p = phase(x);
        if p.is_finite() {
            Ok(p)
        } else {
            Err(QuadratureError::NonFinite { at: x })
        }
    };
    let mut boundaries = vec![lo];
    let mut start = lo;
    let mut start_phase = eval(lo)?;
    while start < hi {
        let rate = phase_rate(start).abs();
        let mut step = if rate.is_finite() && rate > 0.0 {
            (TAU / rate).min(hi - start)
        } else {
            hi - start
        };
        let (end, end_phase) = loop {
            let end = if step >= hi - start { hi } else { start + step };
            let end_phase = eval(end)?;
            let mid_phase = eval(0.5 * (start + end))?;
            let spans_one_period =
                (end_phase - start_phase).abs() <= TAU && (mid_phase - start_phase).abs() <= TAU;
            if spans_one_period || end <= start || 0.5 * (start + end) <= start {
                break (end, end_phase);
            }
            step *= 0.5;
        };
        if end <= start {
            break;
        }
        boundaries.push(end);
        if boundaries.len() > max_panels + 1 {
            return Err(QuadratureError::NonConvergence {
                estimate: Complex64::new(f64::NAN, f64::NAN),
                error_bound: f64::INFINITY,
                subdivisions: boundaries.len() - 1,
            });
        }
        start = end;
        start_phase = end_phase;
    }
    if *boundaries.last().unwrap_or(&lo) != hi {
        boundaries.push(hi);
    }
    Ok(boundaries)
}

/// Integrate `exp(i * phase(u))` over `[lo, hi]`.
///
/// `phase_rate` must be the derivative of `phase`; it is only used to size
/// the initial panels, so it may be unbounded at the endpoints.
pub fn integrate_oscillatory<P, R>(
    phase: P,
    phase_rate: R,
    lo: f64,
    hi: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<Complex64>, QuadratureError>
where
    P: Fn(f64) -> f64,
    R: Fn(f64) -> f64,
{
    spec.validate()?;
    check_interval(lo, hi)?;
    if lo == hi {
        return Ok(QuadratureResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            subdivisions_used: 0,
        });
    }
    let boundaries = phase_panels(&phase, phase_rate, lo, hi, spec.max_subdivisions)?;
    let integrand = |u: f64| Complex64::from_polar(1.0, phase(u));
    adaptive(&integrand, &boundaries, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tight() -> QuadratureSpec {
        QuadratureSpec::new(1e-13, 1e-13, 100_000).unwrap()
    }

    /// Maclaurin series of the integral of cos(u^2) over [0, 1].
    fn cos_square_series() -> f64 {
        let mut sum = 0.0;
        let mut fact = 1.0;
        for k in 0..20 {
            if k > 0 {
                fact *= ((2 * k - 1) * (2 * k)) as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign / (fact * (4 * k + 1) as f64);
        }
        sum
    }

    #[test]
    fn constant_integrand() {
        let spec = QuadratureSpec::default();
        let r = integrate(|_| 1.0, 0.0, 1.0, &spec).unwrap();
        assert!((r.value - 1.0).abs() <= spec.abs_tol);
        assert!(r.subdivisions_used <= spec.max_subdivisions);
    }

    #[test]
    fn sine_over_half_period() {
        let spec = QuadratureSpec::default();
        let r = integrate(f64::sin, 0.0, PI, &spec).unwrap();
        assert!((r.value - 2.0).abs() <= spec.abs_tol);
        assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn cos_square_matches_series() {
        let expected = cos_square_series();
        assert!((expected - 0.904_524_237_900_272).abs() < 1e-14);
        let r = integrate(|u: f64| (u * u).cos(), 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - expected).abs() < 1e-10);
    }

    #[test]
    fn empty_interval_is_zero() {
        let r = integrate(f64::exp, 2.0, 2.0, &QuadratureSpec::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.subdivisions_used, 0);
    }

    #[test]
    fn reversed_interval_rejected() {
        let err = integrate(f64::exp, 1.0, 0.0, &QuadratureSpec::default()).unwrap_err();
        assert!(matches!(err, QuadratureError::InvalidRequest(_)));
    }

    #[test]
    fn bad_spec_rejected() {
        assert!(QuadratureSpec::new(0.0, 1e-10, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, -1.0, 10).is_err());
        assert!(QuadratureSpec::new(1e-10, 0.0, 0).is_err());
        assert!(QuadratureSpec::new(1e-10, 0.0, 1).is_ok());
    }

    #[test]
    fn non_finite_integrand_reports_point() {
        let err = integrate(
            |u: f64| 1.0 / (u - 0.5),
            0.0,
            1.0,
            &QuadratureSpec::default(),
        )
        .unwrap_err();
        // The centre of the first panel is exactly 0.5.
        assert_eq!(err, QuadratureError::NonFinite { at: 0.5 });
    }

    #[test]
    fn subdivision_limit_reports_best_estimate() {
        let spec = QuadratureSpec::new(1e-14, 0.0, 3).unwrap();
        let err = integrate(|u: f64| (50.0 * u).sin(), 0.0, 10.0, &spec).unwrap_err();
        match err {
            QuadratureError::NonConvergence {
                estimate,
                error_bound,
                subdivisions,
            } => {
                assert!(subdivisions <= 3);
                assert!(error_bound > 1e-14);
                assert!(estimate.re.is_finite());
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn tolerance_below_rounding_returns_floor() {
        let spec = QuadratureSpec::new(1e-300, 0.0, 1000).unwrap();
        let r = integrate(|u: f64| u * u, 0.0, 3.0, &spec).unwrap();
        assert!((r.value - 9.0).abs() < 1e-14);
        assert!(r.error_estimate > 0.0 && r.error_estimate < 1e-12);
    }

    #[test]
    fn complex_integrand() {
        // Integral of exp(iu) over [0, pi] is 2i.
        let r = integrate(|u: f64| Complex64::from_polar(1.0, u), 0.0, PI, &tight()).unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn oscillatory_without_phase_is_length() {
        let r =
            integrate_oscillatory(|_| 0.0, |_| 0.0, 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn oscillatory_square_phase_agrees_with_plain() {
        let spec = QuadratureSpec::default();
        let osc = integrate_oscillatory(|u| u * u, |u| 2.0 * u, 0.0, 10.0, &spec).unwrap();
        let plain =
            integrate(|u: f64| Complex64::from_polar(1.0, u * u), 0.0, 10.0, &spec).unwrap();
        let tol = osc.error_estimate + plain.error_estimate + 2.0 * spec.abs_tol;
        assert!((osc.value - plain.value).norm() <= tol);
    }

    #[test]
    fn oscillatory_peel_phase_agrees_with_plain() {
        let a = 2.0 * PI;
        let hi = a - 1e-6;
        let phase = move |u: f64| -((a - u) * (a + u)).sqrt();
        let rate = move |u: f64| u / ((a - u) * (a + u)).sqrt();
        let spec = QuadratureSpec::default();
        let osc = integrate_oscillatory(phase, rate, 0.0, hi, &spec).unwrap();
        let plain = integrate(|u| Complex64::from_polar(1.0, phase(u)), 0.0, hi, &spec).unwrap();
        let tol = osc.error_estimate + plain.error_estimate + 2.0 * spec.abs_tol;
        assert!((osc.value - plain.value).norm() <= tol);
    }

    #[test]
    fn phase_panels_span_at_most_one_period() {
        let phase = |u: f64| u * u;
        let b = phase_panels(phase, |u| 2.0 * u, 0.0, 10.0, 10_000).unwrap();
        assert_eq!(b[0], 0.0);
        assert_eq!(*b.last().unwrap(), 10.0);
        for w in b.windows(2) {
            assert!(w[0] < w[1]);
            assert!((phase(w[1]) - phase(w[0])).abs() <= TAU);
        }
        // 100 radians of phase needs at least 16 periods.
        assert!(b.len() > 16);
    }

    #[test]
    fn repeated_calls_are_bit_identical() {
        let spec = QuadratureSpec::default();
        let f = |u: f64| Complex64::from_polar(1.0 + u, u * u * u);
        let a = integrate(f, 0.0, 4.0, &spec).unwrap();
        let b = integrate(f, 0.0, 4.0, &spec).unwrap();
        assert_eq!(a.value.re.to_bits(), b.value.re.to_bits());
        assert_eq!(a.value.im.to_bits(), b.value.im.to_bits());
        assert_eq!(a.error_estimate.to_bits(), b.error_estimate.to_bits());
    }

    #[test]
    fn pending_order_prefers_larger_error_then_smaller_lo() {
        let mut heap = BinaryHeap::new();
        heap.push(Pending {
            error: 1.0,
            lo: 0.5,
            index: 0,
        });
        heap.push(Pending {
            error: 1.0,
            lo: 0.1,
            index: 1,
        });
        heap.push(Pending {
            error: 0.5,
            lo: 0.0,
            index: 2,
        });
        assert_eq!(heap.pop().unwrap().index, 1);
        assert_eq!(heap.pop().unwrap().index, 0);
        assert_eq!(heap.pop().unwrap().index, 2);
    }
}
