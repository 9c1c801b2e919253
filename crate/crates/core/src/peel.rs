// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! The flattened orange-peel spiral.
//!
//! A unit sphere is cut along a spiral strip of width `1/N` and the strip is
//! laid flat. Parameterized by arclength `t ∈ [−a, a]` with `a = 2πN`, the
//! point on the sphere sits at height `s = t/a`, the flattened curve has
//! signed curvature `κ(t) = t/√(a² − t²)` and tangent angle
//! `φ(t) = −√(a² − t²)`, so
//!
//! ```text
//! z(t) = x(t) + i·y(t) = ∫₀ᵗ exp(−i·√(a² − u²)) du.
//! ```
//!
//! The generated curve is the single curve these equations define; which
//! line inside the physical strip it tracks (an edge or the centre line) is
//! left open.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::curve::{CurveFrame, PlanePoint, SampledCurve};
use crate::error::{invalid, require_finite, Error, Result};
use crate::quadrature::{integrate, integrate_oscillatory, QuadratureSpec};

/// Fraction of the half-domain, measured from the pole, over which the
/// integrand is rewritten with `u = a·sin θ`.
const POLE_ZONE_FRACTION: f64 = 0.01;

/// Relative distance from the poles at which [`sample_peel`] stops.
pub const POLE_CLIP_FRACTION: f64 = 1e-9;

/// Winding count and quadrature settings of a peel spiral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeelParams {
    windings: f64,
    half_domain: f64,
    quad: QuadratureSpec,
}

impl PeelParams {
    /// Peel of width `1/windings`. Non-integer winding counts are allowed.
    pub fn new(windings: f64) -> Result<Self> {
        Self::with_quadrature(windings, QuadratureSpec::default())
    }

    pub fn with_quadrature(windings: f64, quad: QuadratureSpec) -> Result<Self> {
        if !(windings > 0.0 && windings.is_finite()) {
            return Err(invalid(format!(
                "winding count N must be positive and finite, got {windings}"
            )));
        }
        quad.validate()?;
        Ok(PeelParams {
            windings,
            half_domain: TAU * windings,
            quad,
        })
    }

    /// `N`.
    pub fn windings(&self) -> f64 {
        self.windings
    }

    /// `a = 2πN`; the parameter domain is `[−a, a]`.
    pub fn half_domain(&self) -> f64 {
        self.half_domain
    }

    pub fn quadrature(&self) -> &QuadratureSpec {
        &self.quad
    }

    /// `√(a² − t²)`, factored to avoid cancellation near the poles.
    fn radicand_root(&self, t: f64) -> f64 {
        let a = self.half_domain;
        ((a - t) * (a + t)).sqrt()
    }

    fn check_closed(&self, t: f64) -> Result<()> {
        require_finite("t", t)?;
        if t.abs() > self.half_domain {
            return Err(Error::OutOfDomain {
                value: t,
                bound: format!("|t| <= 2πN = {}", self.half_domain),
            });
        }
        Ok(())
    }
}

/// Height `s = t/(2πN)` on the sphere reached at parameter `t`.
pub fn height(t: f64, p: &PeelParams) -> Result<f64> {
    p.check_closed(t)?;
    Ok(t / p.half_domain)
}

/// Signed curvature `t/√(a² − t²)`; undefined at the poles.
pub fn curvature(t: f64, p: &PeelParams) -> Result<f64> {
    require_finite("t", t)?;
    if t.abs() >= p.half_domain {
        return Err(Error::OutOfDomain {
            value: t,
            bound: format!(
                "|t| < 2πN = {} (curvature diverges at the poles)",
                p.half_domain
            ),
        });
    }
    Ok(t / p.radicand_root(t))
}

/// Tangent angle `φ(t) = −√(a² − t²)`.
pub fn phase(t: f64, p: &PeelParams) -> Result<f64> {
    p.check_closed(t)?;
    Ok(-p.radicand_root(t))
}

/// `∫ exp(iφ(u)) du` over `[lo, hi]` with `0 ≤ lo ≤ hi ≤ a`.
fn arc_increment(lo: f64, hi: f64, p: &PeelParams) -> Result<Complex64> {
    debug_assert!(0.0 <= lo && lo <= hi && hi <= p.half_domain);
    let a = p.half_domain;
    let zone = a * (1.0 - POLE_ZONE_FRACTION);
    let mut total = Complex64::new(0.0, 0.0);
    if lo < zone {
        let end = hi.min(zone);
        let r = integrate_oscillatory(
            |u| -((a - u) * (a + u)).sqrt(),
            |u| u / ((a - u) * (a + u)).sqrt(),
            lo,
            end,
            &p.quad,
        )?;
        total += r.value;
    }
    if hi > zone {
        // u = a·sin θ turns the square-root endpoint into a smooth integrand.
        let theta_lo = (lo.max(zone) / a).asin();
        let theta_hi = (hi / a).min(1.0).asin();
        let r = integrate(
            |theta: f64| {
                let (_, cos) = theta.sin_cos();
                Complex64::from_polar(a * cos, -a * cos)
            },
            theta_lo,
            theta_hi,
            &p.quad,
        )?;
        total += r.value;
    }
    Ok(total)
}

/// Point `z(t)` of the flattened peel, for `|t| ≤ 2πN`.
///
/// Evaluated on `[0, |t|]` and negated for negative `t`, so `z(−t) = −z(t)`
/// exactly.
pub fn peel_point(t: f64, p: &PeelParams) -> Result<PlanePoint> {
    p.check_closed(t)?;
    let z = PlanePoint::from(arc_increment(0.0, t.abs(), p)?);
    Ok(if t < 0.0 { -z } else { z })
}

/// Frames at the non-negative parameters `ts` (sorted ascending), each
/// integrated from its predecessor.
pub(crate) fn frames_along(ts: &[f64], p: &PeelParams) -> Result<Vec<CurveFrame>> {
    let mut out = Vec::with_capacity(ts.len());
    let mut prev_t = 0.0;
    let mut z = Complex64::new(0.0, 0.0);
    for &t in ts {
        debug_assert!(t >= prev_t);
        z += arc_increment(prev_t, t, p)?;
        prev_t = t;
        let root = p.radicand_root(t);
        out.push(CurveFrame {
            t,
            point: PlanePoint::from(z),
            phi: -root,
            kappa: t / root,
        });
    }
    Ok(out)
}

/// `n ≥ 3` frames at uniform parameters over `[−a + δ, a − δ]`,
/// `δ = a·1e−9`, so that every stored curvature is finite.
pub fn sample_peel(p: &PeelParams, n: usize) -> Result<SampledCurve> {
    if n < 3 {
        return Err(invalid(format!("need at least 3 samples, got {n}")));
    }
    let limit = p.half_domain * (1.0 - POLE_CLIP_FRACTION);
    let m = n - 1;
    // t_i = limit·(2i − m)/m: mirrored indices give exactly negated parameters.
    let param = |i: usize| -> f64 {
        let k = 2 * i as i64 - m as i64;
        if k == m as i64 {
            limit
        } else {
            limit * k as f64 / m as f64
        }
    };
    let first_non_negative = m.div_ceil(2);
    let positive: Vec<f64> = (first_non_negative..n).map(param).collect();
    let right = frames_along(&positive, p)?;
    let mut frames = Vec::with_capacity(n);
    let mirrored = right
        .iter()
        .rev()
        .filter(|f| f.t > 0.0)
        .map(|f| CurveFrame {
            t: -f.t,
            point: -f.point,
            phi: f.phi,
            kappa: -f.kappa,
        });
    frames.extend(mirrored);
    frames.extend(right);
    debug_assert_eq!(frames.len(), n);
    SampledCurve::new(frames)
}

/// Two heights on the unit sphere bounding a zone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereStrip {
    h1: f64,
    h2: f64,
}

impl SphereStrip {
    pub fn new(h1: f64, h2: f64) -> Result<Self> {
        if !(-1.0 <= h1 && h1 <= h2 && h2 <= 1.0) {
            return Err(invalid(format!(
                "strip heights must satisfy -1 <= h1 <= h2 <= 1, got ({h1}, {h2})"
            )));
        }
        Ok(SphereStrip { h1, h2 })
    }

    pub fn lower(&self) -> f64 {
        self.h1
    }

    pub fn upper(&self) -> f64 {
        self.h2
    }
}

/// Area `2π(h₂ − h₁)` of the zone between two horizontal planes.
pub fn strip_area(s: &SphereStrip) -> f64 {
    TAU * (s.h2 - s.h1)
}

/// Circumference `2π√(1 − s²)` of the parallel at height `s`.
pub fn parallel_perimeter(s: f64) -> Result<f64> {
    if s.is_nan() || s.abs() > 1.0 {
        return Err(invalid(format!("height must satisfy |s| <= 1, got {s}")));
    }
    Ok(TAU * ((1.0 - s) * (1.0 + s)).sqrt())
}

/// Surface width `ε/√(1 − s²)` of a thin zone of height `ε` at height `s`.
pub fn strip_width(s: f64, eps: f64) -> Result<f64> {
    if s.is_nan() || s.abs() >= 1.0 {
        return Err(invalid(format!("height must satisfy |s| < 1, got {s}")));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(invalid(format!("strip height must be positive, got {eps}")));
    }
    Ok(eps / ((1.0 - s) * (1.0 + s)).sqrt())
}

/// Length `4πN` of the unit-speed parameter domain.
pub fn total_length(p: &PeelParams) -> f64 {
    4.0 * PI * p.windings
}
