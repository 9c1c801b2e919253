// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! C interface to `peelspiral`.
//!
//! Every fallible function returns a [`PsStatus`] and writes results through
//! out-pointers. On failure a description is available from
//! [`ps_last_error_message`] on the same thread. Sampled curves and
//! convergence reports are opaque handles released with [`ps_curve_free`]
//! and [`ps_report_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use peelspiral::applications::{slit_intensity, SlitChord};
use peelspiral::convergence::{self, ConvergenceReport};
use peelspiral::error::Error;
use peelspiral::euler;
use peelspiral::peel::{self, PeelParams, SphereStrip};
use peelspiral::quadrature::{QuadratureError, QuadratureSpec};
use peelspiral::{CurveFrame, PlanePoint, SampledCurve};

/// Result code of every fallible call.
#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    InvalidArgument = 1,
    OutOfDomain = 2,
    NonConvergence = 3,
    NullPointer = 4,
    IndexOutOfRange = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsPoint {
    pub x: f64,
    pub y: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsFrame {
    /// Arclength parameter.
    pub t: f64,
    pub point: PsPoint,
    /// Tangent angle (radians).
    pub phi: f64,
    /// Signed curvature.
    pub kappa: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsQuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsConvergenceEntry {
    pub windings: u32,
    pub t_rescaled: f64,
    pub abs_error: f64,
    pub rescaled_error: f64,
}

/// Opaque sampled curve.
pub struct PsCurve {
    inner: SampledCurve,
}

/// Opaque convergence report.
pub struct PsConvergenceReport {
    inner: ConvergenceReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> PsStatus {
    match e {
        Error::InvalidArgument(_) => PsStatus::InvalidArgument,
        Error::OutOfDomain { .. } => PsStatus::OutOfDomain,
        Error::Quadrature(QuadratureError::InvalidRequest(_)) => PsStatus::InvalidArgument,
        Error::Quadrature(_) => PsStatus::NonConvergence,
    }
}

fn fail(e: Error) -> PsStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn null_pointer(what: &str) -> PsStatus {
    set_last_error(&format!("{what} must not be null"));
    PsStatus::NullPointer
}

/// Run `body`, turning panics into [`PsStatus::Panic`].
fn guard(body: impl FnOnce() -> Result<(), PsStatus>) -> PsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            PsStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            PsStatus::Panic
        }
    }
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), PsStatus> {
    if out.is_null() {
        return Err(null_pointer(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn quad_spec(spec: *const PsQuadratureSpec) -> QuadratureSpec {
    match spec.as_ref() {
        Some(s) => QuadratureSpec {
            abs_tol: s.abs_tol,
            rel_tol: s.rel_tol,
            max_subdivisions: s.max_subdivisions,
        },
        None => QuadratureSpec::default(),
    }
}

fn point(p: PlanePoint) -> PsPoint {
    PsPoint { x: p.x, y: p.y }
}

fn frame(f: &CurveFrame) -> PsFrame {
    PsFrame {
        t: f.t,
        point: point(f.point),
        phi: f.phi,
        kappa: f.kappa,
    }
}

/// Message describing the last failure on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Default quadrature settings (1e-10 absolute and relative, 10^6 panels).
#[no_mangle]
pub extern "C" fn ps_quadrature_default() -> PsQuadratureSpec {
    let d = QuadratureSpec::default();
    PsQuadratureSpec {
        abs_tol: d.abs_tol,
        rel_tol: d.rel_tol,
        max_subdivisions: d.max_subdivisions,
    }
}

/// Fresnel integrals C(t) = ∫₀ᵗ cos u² du and S(t) = ∫₀ᵗ sin u² du.
#[no_mangle]
pub unsafe extern "C" fn ps_fresnel(t: f64, c: *mut f64, s: *mut f64) -> PsStatus {
    guard(|| {
        if c.is_null() || s.is_null() {
            return Err(null_pointer("output pointer"));
        }
        let v = euler::fresnel(t).map_err(fail)?;
        write_out(c, v.c, "c")?;
        write_out(s, v.s, "s")
    })
}

/// Point (C(t), S(t)) of the Euler spiral.
#[no_mangle]
pub unsafe extern "C" fn ps_euler_point(t: f64, out: *mut PsPoint) -> PsStatus {
    guard(|| {
        let p = euler::euler_point(t).map_err(fail)?;
        write_out(out, point(p), "out")
    })
}

/// Signed curvature 2t of the Euler spiral.
#[no_mangle]
pub extern "C" fn ps_euler_curvature(t: f64) -> f64 {
    euler::euler_curvature(t)
}

/// Limit point for `sign` = +1 or -1.
#[no_mangle]
pub unsafe extern "C" fn ps_limit_point(sign: i32, out: *mut PsPoint) -> PsStatus {
    guard(|| {
        let p = euler::limit_point(sign).map_err(fail)?;
        write_out(out, point(p), "out")
    })
}

unsafe fn peel_params(
    windings: f64,
    spec: *const PsQuadratureSpec,
) -> Result<PeelParams, PsStatus> {
    PeelParams::with_quadrature(windings, quad_spec(spec)).map_err(fail)
}

/// Height t/(2πN) on the sphere.
#[no_mangle]
pub unsafe extern "C" fn ps_peel_height(windings: f64, t: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        let p = peel_params(windings, ptr::null())?;
        write_out(out, peel::height(t, &p).map_err(fail)?, "out")
    })
}

/// Signed curvature t/√((2πN)² − t²) of the flattened peel.
#[no_mangle]
pub unsafe extern "C" fn ps_peel_curvature(windings: f64, t: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        let p = peel_params(windings, ptr::null())?;
        write_out(out, peel::curvature(t, &p).map_err(fail)?, "out")
    })
}

/// Tangent angle −√((2πN)² − t²) of the flattened peel.
#[no_mangle]
pub unsafe extern "C" fn ps_peel_phase(windings: f64, t: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        let p = peel_params(windings, ptr::null())?;
        write_out(out, peel::phase(t, &p).map_err(fail)?, "out")
    })
}

/// Point z(t) of the flattened peel. `spec` may be null for defaults.
#[no_mangle]
pub unsafe extern "C" fn ps_peel_point(
    windings: f64,
    t: f64,
    spec: *const PsQuadratureSpec,
    out: *mut PsPoint,
) -> PsStatus {
    guard(|| {
        let p = peel_params(windings, spec)?;
        let z = peel::peel_point(t, &p).map_err(fail)?;
        write_out(out, point(z), "out")
    })
}

unsafe fn emit_curve(
    curve: Result<SampledCurve, Error>,
    out: *mut *mut PsCurve,
) -> Result<(), PsStatus> {
    if out.is_null() {
        return Err(null_pointer("out"));
    }
    let curve = curve.map_err(fail)?;
    out.write(Box::into_raw(Box::new(PsCurve { inner: curve })));
    Ok(())
}

/// Sample the peel at `samples` uniform parameters. Free with `ps_curve_free`.
#[no_mangle]
pub unsafe extern "C" fn ps_sample_peel(
    windings: f64,
    samples: usize,
    spec: *const PsQuadratureSpec,
    out: *mut *mut PsCurve,
) -> PsStatus {
    guard(|| {
        let p = peel_params(windings, spec)?;
        emit_curve(peel::sample_peel(&p, samples), out)
    })
}

/// Sample the Euler spiral over [t_min, t_max]. Free with `ps_curve_free`.
#[no_mangle]
pub unsafe extern "C" fn ps_sample_euler(
    t_min: f64,
    t_max: f64,
    samples: usize,
    out: *mut *mut PsCurve,
) -> PsStatus {
    guard(|| emit_curve(euler::sample_euler(t_min, t_max, samples), out))
}

/// Clothoid transition with curvature `rate · s` over arclength `length`.
#[no_mangle]
pub unsafe extern "C" fn ps_clothoid_transition(
    rate: f64,
    length: f64,
    samples: usize,
    out: *mut *mut PsCurve,
) -> PsStatus {
    guard(|| emit_curve(euler::clothoid_transition(rate, length, samples), out))
}

/// Number of frames in `curve` (0 for null).
#[no_mangle]
pub unsafe extern "C" fn ps_curve_len(curve: *const PsCurve) -> usize {
    curve.as_ref().map_or(0, |c| c.inner.len())
}

/// Copy frame `index` of `curve` into `out`.
#[no_mangle]
pub unsafe extern "C" fn ps_curve_frame(
    curve: *const PsCurve,
    index: usize,
    out: *mut PsFrame,
) -> PsStatus {
    guard(|| {
        let curve = curve.as_ref().ok_or_else(|| null_pointer("curve"))?;
        let f = curve.inner.frames().get(index).ok_or_else(|| {
            set_last_error(&format!(
                "frame index {index} out of range for {} frames",
                curve.inner.len()
            ));
            PsStatus::IndexOutOfRange
        })?;
        write_out(out, frame(f), "out")
    })
}

/// Release a curve handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ps_curve_free(curve: *mut PsCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Grid-maximum distance between the peel of width 1/N and the rescaled
/// Euler spiral over [−√(4πN)T, √(4πN)T].
#[no_mangle]
pub unsafe extern "C" fn ps_sup_error(
    windings: u32,
    t_rescaled: f64,
    samples: usize,
    spec: *const PsQuadratureSpec,
    absolute: *mut f64,
    rescaled: *mut f64,
) -> PsStatus {
    guard(|| {
        if absolute.is_null() || rescaled.is_null() {
            return Err(null_pointer("output pointer"));
        }
        let e = convergence::sup_error(windings, t_rescaled, samples, &quad_spec(spec))
            .map_err(fail)?;
        write_out(absolute, e.absolute, "absolute")?;
        write_out(rescaled, e.rescaled, "rescaled")
    })
}

/// Leading-order error estimate |t|⁵ / (40·(2πN)³).
#[no_mangle]
pub extern "C" fn ps_error_estimate(t: f64, windings: u32) -> f64 {
    convergence::error_estimate(t, windings)
}

/// Convergence study over `count` winding counts. Free with `ps_report_free`.
#[no_mangle]
pub unsafe extern "C" fn ps_convergence_study(
    windings: *const u32,
    count: usize,
    t_rescaled: f64,
    samples: usize,
    spec: *const PsQuadratureSpec,
    out: *mut *mut PsConvergenceReport,
) -> PsStatus {
    guard(|| {
        if windings.is_null() {
            return Err(null_pointer("windings"));
        }
        if out.is_null() {
            return Err(null_pointer("out"));
        }
        let ns = std::slice::from_raw_parts(windings, count);
        let report = convergence::convergence_study(ns, t_rescaled, samples, &quad_spec(spec))
            .map_err(fail)?;
        out.write(Box::into_raw(Box::new(PsConvergenceReport {
            inner: report,
        })));
        Ok(())
    })
}

/// Number of entries in `report` (0 for null).
#[no_mangle]
pub unsafe extern "C" fn ps_report_len(report: *const PsConvergenceReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.entries.len())
}

/// Fitted log-log slope of rescaled error against N (NaN for null).
#[no_mangle]
pub unsafe extern "C" fn ps_report_slope(report: *const PsConvergenceReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.inner.fitted_slope)
}

#[no_mangle]
pub unsafe extern "C" fn ps_report_entry(
    report: *const PsConvergenceReport,
    index: usize,
    out: *mut PsConvergenceEntry,
) -> PsStatus {
    guard(|| {
        let report = report.as_ref().ok_or_else(|| null_pointer("report"))?;
        let e = report.inner.entries.get(index).ok_or_else(|| {
            set_last_error(&format!("entry index {index} out of range"));
            PsStatus::IndexOutOfRange
        })?;
        write_out(
            out,
            PsConvergenceEntry {
                windings: e.windings,
                t_rescaled: e.t_rescaled,
                abs_error: e.abs_error,
                rescaled_error: e.rescaled_error,
            },
            "out",
        )
    })
}

/// Release a report handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ps_report_free(report: *mut PsConvergenceReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Squared chord between spiral parameters `t1 <= t2`; pass -INFINITY /
/// INFINITY for the limit points.
#[no_mangle]
pub unsafe extern "C" fn ps_slit_intensity(t1: f64, t2: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        let chord = SlitChord::from_parameters(t1, t2).map_err(fail)?;
        write_out(out, slit_intensity(&chord).map_err(fail)?, "out")
    })
}

/// Area 2π(h2 − h1) of a sphere zone.
#[no_mangle]
pub unsafe extern "C" fn ps_strip_area(h1: f64, h2: f64, out: *mut f64) -> PsStatus {
    guard(|| {
        let strip = SphereStrip::new(h1, h2).map_err(fail)?;
        write_out(out, peel::strip_area(&strip), "out")
    })
}

/// Circumference 2π√(1 − s²) of the parallel at height `s`.
#[no_mangle]
pub unsafe extern "C" fn ps_parallel_perimeter(s: f64, out: *mut f64) -> PsStatus {
    guard(|| write_out(out, peel::parallel_perimeter(s).map_err(fail)?, "out"))
}

/// Surface width ε/√(1 − s²) of a thin zone at height `s`.
#[no_mangle]
pub unsafe extern "C" fn ps_strip_width(s: f64, eps: f64, out: *mut f64) -> PsStatus {
    guard(|| write_out(out, peel::strip_width(s, eps).map_err(fail)?, "out"))
}
