// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Empirical check that the rescaled peel spiral converges to the Euler
//! spiral.
//!
//! Expanding `√(a² − u²) = a − u²/(2a) + O(u⁴/a³)` with `a = 2πN` and
//! integer `N` (so the constant phase `exp(−2πiN)` is exactly one) gives
//!
//! ```text
//! z(t) ≈ √(4πN) · E(t / √(4πN)),   E(T) = ∫₀ᵀ exp(iv²) dv,
//! ```
//!
//! with a remainder of order `t⁵/N³`. On the window `|t| ≤ √(4πN)·T` the
//! absolute error is therefore `O(T⁵/√N)` and the error after dividing by
//! the spiral size `√(4πN)` is `O(T⁵/N)`. Errors are measured as a maximum
//! over a uniform grid, which both curves (unit speed) make a faithful proxy
//! for the true supremum.

use std::f64::consts::PI;

use crate::curve::{uniform_grid, PlanePoint};
use crate::error::{invalid, require_finite, Error, Result};
use crate::euler::euler_point;
use crate::peel::{frames_along, PeelParams};
use crate::quadrature::QuadratureSpec;

/// Default number of grid points for [`sup_error`].
pub const DEFAULT_SAMPLES: usize = 1001;

/// `√(4πN)`, the factor relating the peel and Euler parameters.
pub fn rescale_factor(windings: u32) -> f64 {
    (4.0 * PI * windings as f64).sqrt()
}

/// Converts a real winding count to the integer the comparison requires.
pub fn integer_windings(n: f64) -> Result<u32> {
    if n.is_finite() && n >= 1.0 && n.fract() == 0.0 && n <= u32::MAX as f64 {
        Ok(n as u32)
    } else {
        Err(invalid(format!(
            "convergence checks need an integer winding count N >= 1, got {n}"
        )))
    }
}

fn check_windings(windings: u32) -> Result<()> {
    if windings == 0 {
        return Err(invalid("winding count N must be at least 1"));
    }
    Ok(())
}

/// `√(4πN) · E(t/√(4πN))`, the Euler-spiral approximation of the peel point.
pub fn rescaled_euler(t: f64, windings: u32) -> Result<PlanePoint> {
    check_windings(windings)?;
    require_finite("t", t)?;
    let scale = rescale_factor(windings);
    Ok(euler_point(t / scale)? * scale)
}

/// Largest `T` for which `[−√(4πN)T, √(4πN)T]` fits in the peel domain.
pub fn max_rescaled_parameter(windings: u32) -> f64 {
    (PI * windings as f64).sqrt()
}

/// Grid-maximum distance between the peel and its Euler approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupError {
    pub absolute: f64,
    /// `absolute / √(4πN)`.
    pub rescaled: f64,
}

/// Compare the peel of width `1/N` with the rescaled Euler spiral on
/// `n_samples` uniform parameters in `[−√(4πN)T, √(4πN)T]`.
pub fn sup_error(
    windings: u32,
    t_rescaled: f64,
    n_samples: usize,
    quad: &QuadratureSpec,
) -> Result<SupError> {
    check_windings(windings)?;
    if !(t_rescaled > 0.0 && t_rescaled.is_finite()) {
        return Err(invalid(format!(
            "T must be positive and finite, got {t_rescaled}"
        )));
    }
    if n_samples < 10 {
        return Err(invalid(format!(
            "need at least 10 samples, got {n_samples}"
        )));
    }
    let bound = max_rescaled_parameter(windings);
    if t_rescaled > bound {
        return Err(Error::OutOfDomain {
            value: t_rescaled,
            bound: format!("T <= sqrt(pi*N) = {bound} for N = {windings}"),
        });
    }
    let scale = rescale_factor(windings);
    let params = PeelParams::with_quadrature(windings as f64, *quad)?;
    let t_max = (scale * t_rescaled).min(params.half_domain());
    // Both curves are exactly odd, so the non-negative half of the
    // symmetric grid carries every distinct error.
    let grid = uniform_grid(-t_max, t_max, n_samples);
    let positive: Vec<f64> = grid.into_iter().filter(|&t| t >= 0.0).collect();
    let frames = frames_along(&positive, &params)?;
    let mut absolute: f64 = 0.0;
    for f in &frames {
        let approx = rescaled_euler(f.t, windings)?;
        absolute = absolute.max(f.point.distance(approx));
    }
    Ok(SupError {
        absolute,
        rescaled: absolute / scale,
    })
}

/// Integrated leading Taylor remainder `|t|⁵ / (40·(2πN)³)`.
///
/// The phase error of the quadratic approximation is `u⁴/(8a³)` to leading
/// order, and `|exp(iα) − exp(iβ)| ≤ |α − β|`.
pub fn error_estimate(t: f64, windings: u32) -> f64 {
    let a = 2.0 * PI * windings as f64;
    t.abs().powi(5) / (40.0 * a.powi(3))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceEntry {
    pub windings: u32,
    pub t_rescaled: f64,
    pub abs_error: f64,
    pub rescaled_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// Sorted by winding count, ascending.
    pub entries: Vec<ConvergenceEntry>,
    /// Least-squares slope of `ln(rescaled_error)` against `ln(N)`.
    pub fitted_slope: f64,
}

/// Ordinary least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(invalid("slope fit needs equally many x and y values"));
    }
    if xs.len() < 2 {
        return Err(invalid("slope fit needs at least two points"));
    }
    if xs.iter().chain(ys).any(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(invalid("log-log fit needs positive finite values"));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let (sxy, sxx) = lx.iter().zip(&ly).fold((0.0, 0.0), |(sxy, sxx), (x, y)| {
        (sxy + (x - mx) * (y - my), sxx + (x - mx) * (x - mx))
    });
    if sxx == 0.0 {
        return Err(invalid("slope fit needs at least two distinct x values"));
    }
    Ok(sxy / sxx)
}

/// Run [`sup_error`] for every winding count and fit the decay rate.
///
/// Winding counts are evaluated on separate threads; the report is
/// assembled in ascending `N` regardless of completion order.
pub fn convergence_study(
    windings: &[u32],
    t_rescaled: f64,
    n_samples: usize,
    quad: &QuadratureSpec,
) -> Result<ConvergenceReport> {
    let mut ns = windings.to_vec();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() < 3 {
        return Err(invalid(format!(
            "a slope fit needs at least 3 distinct winding counts, got {}",
            ns.len()
        )));
    }
    // Validate every domain bound before any heavy work starts.
    for &n in &ns {
        check_windings(n)?;
        let bound = max_rescaled_parameter(n);
        if t_rescaled > bound {
            return Err(Error::OutOfDomain {
                value: t_rescaled,
                bound: format!("T <= sqrt(pi*N) = {bound} for N = {n}"),
            });
        }
    }
    let results: Vec<Result<SupError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ns
            .iter()
            .map(|&n| scope.spawn(move || sup_error(n, t_rescaled, n_samples, quad)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sup_error worker panicked"))
            .collect()
    });
    let entries = ns
        .iter()
        .zip(results)
        .map(|(&n, r)| {
            r.map(|e| ConvergenceEntry {
                windings: n,
                t_rescaled,
                abs_error: e.absolute,
                rescaled_error: e.rescaled,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let xs: Vec<f64> = entries.iter().map(|e| e.windings as f64).collect();
    let ys: Vec<f64> = entries.iter().map(|e| e.rescaled_error).collect();
    let fitted_slope = loglog_slope(&xs, &ys)?;
    Ok(ConvergenceReport {
        entries,
        fitted_slope,
    })
}
