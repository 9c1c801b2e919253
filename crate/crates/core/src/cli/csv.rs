// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Plain comma-separated tables.
//!
//! Curves use the header `t,x,y,phi,kappa`; lines starting with `#` carry
//! metadata. Numbers are written with 17 significant digits, which parse
//! back to the identical `f64`.

use std::fmt::Write as _;

use crate::convergence::ConvergenceReport;
use crate::curve::{CurveFrame, PlanePoint, SampledCurve};
use crate::error::{invalid, Result};

pub const CURVE_HEADER: &str = "t,x,y,phi,kappa";
pub const CONVERGENCE_HEADER: &str = "N,T,abs_error,rescaled_error";

/// 17 significant digits in scientific notation.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn push_comments(out: &mut String, comments: &[(&str, String)]) {
    for (key, value) in comments {
        let _ = writeln!(out, "# {key}={value}");
    }
}

pub fn curve_to_csv(curve: &SampledCurve, comments: &[(&str, String)]) -> String {
    let mut out = String::with_capacity(90 * (curve.len() + 1));
    push_comments(&mut out, comments);
    out.push_str(CURVE_HEADER);
    out.push('\n');
    for f in curve {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            format_number(f.t),
            format_number(f.point.x),
            format_number(f.point.y),
            format_number(f.phi),
            format_number(f.kappa)
        );
    }
    out
}

/// Parse a curve table written by [`curve_to_csv`], skipping comment lines.
pub fn curve_from_csv(text: &str) -> Result<SampledCurve> {
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == CURVE_HEADER => {}
        other => {
            return Err(invalid(format!(
                "expected header {CURVE_HEADER:?}, got {other:?}"
            )))
        }
    }
    let mut frames = Vec::new();
    for (row, line) in lines.enumerate() {
        let fields = line
            .split(',')
            .map(|f| {
                f.trim()
                    .parse::<f64>()
                    .map_err(|e| invalid(format!("row {}: bad number {f:?}: {e}", row + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        let [t, x, y, phi, kappa] = fields[..] else {
            return Err(invalid(format!(
                "row {}: expected 5 fields, got {}",
                row + 1,
                fields.len()
            )));
        };
        frames.push(CurveFrame {
            t,
            point: PlanePoint::new(x, y),
            phi,
            kappa,
        });
    }
    SampledCurve::new(frames)
}

pub fn report_to_csv(report: &ConvergenceReport, comments: &[(&str, String)]) -> String {
    let mut out = String::new();
    push_comments(&mut out, comments);
    out.push_str(CONVERGENCE_HEADER);
    out.push('\n');
    for e in &report.entries {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            e.windings,
            format_number(e.t_rescaled),
            format_number(e.abs_error),
            format_number(e.rescaled_error)
        );
    }
    let _ = writeln!(out, "# fitted_slope={}", format_number(report.fitted_slope));
    out
}
