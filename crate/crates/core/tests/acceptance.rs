// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p peelspiral --test acceptance`.

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use peelspiral::applications::{slit_intensity, SlitChord};
use peelspiral::cli::csv::curve_from_csv;
use peelspiral::convergence::{convergence_study, error_estimate, sup_error, DEFAULT_SAMPLES};
use peelspiral::euler::{
    clothoid_transition, euler_point, fresnel_asymptotic, fresnel_quadrature, fresnel_series,
    limit_point, sample_euler,
};
use peelspiral::peel::{
    parallel_perimeter, peel_point, sample_peel, strip_area, strip_width, PeelParams, SphereStrip,
};
use peelspiral::{PlanePoint, QuadratureSpec, SampledCurve};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within_budget(elapsed: Duration, budget_s: f64) -> bool {
    elapsed.as_secs_f64() < budget_s
}

/// Signed turning angle between consecutive chords.
fn turn(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> f64 {
    let d1 = b - a;
    let d2 = c - b;
    d1.cross(d2).atan2(d1.x * d2.x + d1.y * d2.y)
}

/// Signed curvature of the circle through three points.
fn menger_curvature(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> f64 {
    let d1 = b - a;
    let d2 = c - b;
    2.0 * d1.cross(d2) / (d1.norm() * d2.norm() * (c - a).norm())
}

fn chord_turning(points: &[PlanePoint]) -> f64 {
    points.windows(3).map(|w| turn(w[0], w[1], w[2])).sum()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let limit = limit_point(1).unwrap();
    let far = euler_point(50.0).unwrap().distance(limit);
    let quad = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    for k in 1..=60 {
        let t = k as f64 / 10.0;
        let s = fresnel_series(t).unwrap();
        let a = fresnel_asymptotic(t).unwrap();
        let q = fresnel_quadrature(t, &quad).unwrap();
        for (u, v) in [(s, a), (s, q), (a, q)] {
            worst = worst.max((u.c - v.c).abs()).max((u.s - v.s).abs());
        }
    }
    let elapsed = start.elapsed();
    check(
        far < 0.02 && worst < 1e-9 && within_budget(elapsed, 1.0),
        format!(
            "|E(50) - limit| = {far:.3e} (< 0.02), max pairwise method gap = {worst:.3e} (< 1e-9), {:.2}s (< 1s)",
            elapsed.as_secs_f64()
        ),
    )
}

/// N = 3 peel sampled with spacing close to 1e-4.
fn fine_peel() -> (SampledCurve, f64, Duration) {
    let start = Instant::now();
    let params = PeelParams::new(3.0).unwrap();
    let a = params.half_domain();
    let n = (2.0 * a / 1e-4).round() as usize + 1;
    let curve = sample_peel(&params, n).unwrap();
    (curve, a, start.elapsed())
}

fn criterion_2(curve: &SampledCurve, a: f64, sampling: Duration) -> Outcome {
    let start = Instant::now();
    let frames = curve.frames();
    let h = frames[1].t - frames[0].t;
    let mut worst: f64 = 0.0;
    let mut tested = 0usize;
    for w in frames.windows(3) {
        let t = w[1].t;
        if !(0.1..=a - 0.5).contains(&t.abs()) {
            continue;
        }
        let fd = menger_curvature(w[0].point, w[1].point, w[2].point);
        let exact = t / ((a - t) * (a + t)).sqrt();
        worst = worst.max(((fd - exact) / exact).abs());
        tested += 1;
    }
    let elapsed = sampling + start.elapsed();
    check(
        worst < 1e-3 && tested > 0 && within_budget(elapsed, 5.0),
        format!(
            "N=3, h={h:.3e}, {tested} points, max relative curvature error = {worst:.3e} (< 1e-3), {:.2}s (< 5s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_3(curve: &SampledCurve, a: f64) -> Outcome {
    let mut worst_speed: f64 = 0.0;
    for w in curve.frames().windows(2) {
        let speed = w[1].point.distance(w[0].point) / (w[1].t - w[0].t);
        worst_speed = worst_speed.max((speed - 1.0).abs());
    }
    let params = PeelParams::new(3.0).unwrap();
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut asymmetric = 0usize;
    for _ in 0..100 {
        let t: f64 = rng.random_range(-a..a);
        let plus = peel_point(t, &params).unwrap();
        let minus = peel_point(-t, &params).unwrap();
        if plus.x.to_bits() != (-minus.x).to_bits() || plus.y.to_bits() != (-minus.y).to_bits() {
            asymmetric += 1;
        }
    }
    check(
        worst_speed < 1e-3 && asymmetric == 0,
        format!(
            "max |speed - 1| = {worst_speed:.3e} over {} samples (< 1e-3), {asymmetric}/100 random t break z(-t) = -z(t)",
            curve.len()
        ),
    )
}

fn criterion_4(curve: &SampledCurve) -> Outcome {
    let target = 12.0 * PI;
    let stored = curve.tangent_total_variation();
    let chords: f64 = curve
        .points()
        .windows(3)
        .map(|w| turn(w[0], w[1], w[2]).abs())
        .sum();
    let rel_stored = (stored - target).abs() / target;
    let rel_chords = (chords - target).abs() / target;
    check(
        rel_stored < 0.01 && rel_chords < 0.01,
        format!(
            "tangent variation / 12pi: frames {:.6}, chords {:.6} (within 1%)",
            stored / target,
            chords / target
        ),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let report = convergence_study(
        &[4, 8, 16, 32, 64],
        1.0,
        DEFAULT_SAMPLES,
        &QuadratureSpec::default(),
    )
    .unwrap();
    let elapsed = start.elapsed();
    let errors: Vec<f64> = report.entries.iter().map(|e| e.rescaled_error).collect();
    let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
    let listed: Vec<String> = report
        .entries
        .iter()
        .map(|e| format!("N={}:{:.3e}", e.windings, e.rescaled_error))
        .collect();
    check(
        decreasing && report.fitted_slope <= -0.8 && within_budget(elapsed, 60.0),
        format!(
            "T=1 rescaled errors [{}], strictly decreasing: {decreasing}, slope = {:.4} (<= -0.8), {:.2}s (< 60s)",
            listed.join(", "),
            report.fitted_slope,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Outcome {
    let measured = sup_error(8, 1.0, DEFAULT_SAMPLES, &QuadratureSpec::default())
        .unwrap()
        .absolute;
    let estimate = error_estimate((32.0 * PI).sqrt(), 8);
    check(
        measured <= 5.0 * estimate,
        format!(
            "N=8, T=1: measured {measured:.4e}, estimate {estimate:.4e}, ratio {:.3} (<= 5)",
            measured / estimate
        ),
    )
}

fn criterion_7() -> Outcome {
    let whole = strip_area(&SphereStrip::new(-1.0, 1.0).unwrap());
    let exact = whole == 4.0 * PI;
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let mut s: f64 = rng.random_range(-1.0..1.0);
        if s == -1.0 {
            s = 0.0;
        }
        let eps: f64 = rng.random_range(1e-6..1e-1);
        let product = strip_width(s, eps).unwrap() * parallel_perimeter(s).unwrap();
        worst = worst.max((product - 2.0 * PI * eps).abs());
    }
    check(
        exact && worst < 1e-12,
        format!(
            "strip_area(-1,1) == 4pi: {exact}, max |width*perimeter - 2pi*eps| = {worst:.3e} (< 1e-12)"
        ),
    )
}

fn criterion_8() -> Outcome {
    let open = slit_intensity(&SlitChord::open_aperture()).unwrap();
    let open_gap = (open - PI).abs();
    let clothoid = clothoid_transition(2.0, 1.0, 101).unwrap();
    let euler = sample_euler(0.0, 1.0, 101).unwrap();
    let mut frame_gap: f64 = 0.0;
    for (c, e) in clothoid.iter().zip(euler.iter()) {
        frame_gap = frame_gap
            .max((c.t - e.t).abs())
            .max(c.point.distance(e.point))
            .max((c.phi - e.phi).abs())
            .max((c.kappa - e.kappa).abs());
    }
    let mut end_gap: f64 = 0.0;
    for (rate, length) in [(2.0, 1.0), (0.5, 3.0), (0.01, 120.0)] {
        let curve = clothoid_transition(rate, length, 51).unwrap();
        let last = curve.frames().last().unwrap();
        end_gap = end_gap.max((last.kappa - rate * length).abs());
    }
    check(
        open_gap < 1e-9 && frame_gap < 1e-9 && end_gap < 1e-9,
        format!(
            "|open aperture - pi| = {open_gap:.3e}, clothoid(2,1) vs euler(0,1) frame gap = {frame_gap:.3e}, end curvature gap = {end_gap:.3e} (all < 1e-9)"
        ),
    )
}

fn run_cli(args: &[&str]) -> Result<(), String> {
    let output = Command::new(env!("CARGO_BIN_EXE_peelspiral"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if output.status.success() {
        Ok(())
    } else {
        Err(String::from_utf8_lossy(&output.stderr).into_owned())
    }
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_default()
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let peel_csv = dir.path().join("peel.csv");
    let peel_svg = dir.path().join("peel.svg");
    let euler_csv = dir.path().join("euler.csv");
    let euler_svg = dir.path().join("euler.svg");
    let p = |path: &Path| path.to_str().unwrap().to_string();
    if let Err(e) = run_cli(&[
        "peel",
        "--n",
        "3",
        "--samples",
        "4001",
        "--out",
        &p(&peel_csv),
        "--svg",
        &p(&peel_svg),
    ]) {
        return check(false, format!("peel command failed: {e}"));
    }
    if let Err(e) = run_cli(&[
        "euler",
        "--t-min",
        "-10",
        "--t-max",
        "10",
        "--samples",
        "4001",
        "--out",
        &p(&euler_csv),
        "--svg",
        &p(&euler_svg),
    ]) {
        return check(false, format!("euler command failed: {e}"));
    }

    let peel = match curve_from_csv(&read(&peel_csv)) {
        Ok(c) => c,
        Err(e) => return check(false, format!("peel CSV unreadable: {e}")),
    };
    let points = peel.points();
    let n = points.len();
    let mid = n / 2;
    let windings_left = chord_turning(&points[..=mid]).abs() / (2.0 * PI);
    let windings_right = chord_turning(&points[mid..]).abs() / (2.0 * PI);
    let symmetric = (0..n).all(|i| {
        let (u, v) = (points[i], points[n - 1 - i]);
        u.x == -v.x && u.y == -v.y
    }) && points[mid] == PlanePoint::ORIGIN;
    let frames = peel.frames();
    let phi_left = (frames[mid].phi - frames[0].phi).abs() / (2.0 * PI);
    let phi_right = (frames[n - 1].phi - frames[mid].phi).abs() / (2.0 * PI);
    let winds_three = [windings_left, windings_right]
        .iter()
        .all(|w| w.round() == 3.0)
        && [phi_left, phi_right].iter().all(|w| (w - 3.0).abs() < 0.01);
    let peel_svg_text = read(&peel_svg);
    let peel_plot =
        peel_svg_text.contains("<svg") && peel_svg_text.matches("<polyline").count() == 1;

    let euler = match curve_from_csv(&read(&euler_csv)) {
        Ok(c) => c,
        Err(e) => return check(false, format!("euler CSV unreadable: {e}")),
    };
    let ep = euler.points();
    let approaches = ep.last().unwrap().distance(limit_point(1).unwrap()) < 0.05
        && ep.first().unwrap().distance(limit_point(-1).unwrap()) < 0.05;
    let euler_svg_text = read(&euler_svg);
    let markers = euler_svg_text.matches("<circle").count();
    let euler_plot = euler_svg_text.matches("<polyline").count() == 1 && markers == 2;

    check(
        winds_three && symmetric && peel_plot && approaches && euler_plot,
        format!(
            "peel N=3 windings per half: chords {windings_left:.4}/{windings_right:.4}, tangent column {phi_left:.5}/{phi_right:.5}, point-symmetric: {symmetric}, svg ok: {peel_plot}; euler reaches both limits: {approaches}, limit markers: {markers}"
        ),
    )
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, Outcome)> = Vec::new();
    results.push((1, criterion_1()));
    let (curve, a, sampling) = fine_peel();
    results.push((2, criterion_2(&curve, a, sampling)));
    results.push((3, criterion_3(&curve, a)));
    results.push((4, criterion_4(&curve)));
    drop(curve);
    results.push((5, criterion_5()));
    results.push((6, criterion_6()));
    results.push((7, criterion_7()));
    results.push((8, criterion_8()));
    results.push((9, criterion_9()));

    let mut failed = 0;
    for (k, outcome) in &results {
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {k}: {tag}  {}", outcome.detail);
        if !outcome.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
