// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Plane points and sampled, arclength-parameterized curves.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{invalid, Result};

/// A point in the flattening plane, equivalently the complex number `x + iy`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sqr(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn distance(self, other: PlanePoint) -> f64 {
        (self - other).norm()
    }

    /// z-component of the cross product.
    pub fn cross(self, other: PlanePoint) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<Complex64> for PlanePoint {
    fn from(z: Complex64) -> Self {
        PlanePoint { x: z.re, y: z.im }
    }
}

impl From<PlanePoint> for Complex64 {
    fn from(p: PlanePoint) -> Self {
        Complex64::new(p.x, p.y)
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> PlanePoint {
        PlanePoint::new(-self.x, -self.y)
    }
}

impl Mul<f64> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, rhs: f64) -> PlanePoint {
        PlanePoint::new(self.x * rhs, self.y * rhs)
    }
}

/// State of a curve at one parameter value.
///
/// Curvature rather than radius is stored so that inflection points (infinite
/// radius) need no sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveFrame {
    /// Arclength parameter.
    pub t: f64,
    pub point: PlanePoint,
    /// Tangent angle in radians, unwrapped.
    pub phi: f64,
    /// Signed curvature.
    pub kappa: f64,
}

/// Frames with strictly increasing parameter.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SampledCurve {
    frames: Vec<CurveFrame>,
}

impl SampledCurve {
    pub fn new(frames: Vec<CurveFrame>) -> Result<Self> {
        if let Some(w) = frames
            .windows(2)
            .find(|w| w[0].t >= w[1].t || w[0].t.is_nan() || w[1].t.is_nan())
        {
            return Err(invalid(format!(
                "frame parameters must be strictly increasing ({} then {})",
                w[0].t, w[1].t
            )));
        }
        Ok(SampledCurve { frames })
    }

    pub fn frames(&self) -> &[CurveFrame] {
        &self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CurveFrame> {
        self.frames.iter()
    }

    pub fn points(&self) -> Vec<PlanePoint> {
        self.frames.iter().map(|f| f.point).collect()
    }

    pub fn into_frames(self) -> Vec<CurveFrame> {
        self.frames
    }

    /// Sum of `|phi[i+1] - phi[i]|` over consecutive frames.
    pub fn tangent_total_variation(&self) -> f64 {
        self.frames
            .windows(2)
            .map(|w| (w[1].phi - w[0].phi).abs())
            .sum()
    }
}

impl<'a> IntoIterator for &'a SampledCurve {
    type Item = &'a CurveFrame;
    type IntoIter = std::slice::Iter<'a, CurveFrame>;
    fn into_iter(self) -> Self::IntoIter {
        self.frames.iter()
    }
}

/// `n` parameters evenly spaced over `[lo, hi]`, endpoints exact.
///
/// Mirror-image intervals give exactly negated grids, which keeps sampled
/// odd curves bit-exactly point symmetric.
pub(crate) fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    let m = (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (lo * (n - 1 - i) as f64 + hi * i as f64) / m
            }
        })
        .collect()
}
