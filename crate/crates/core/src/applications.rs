// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Slit-diffraction intensity and railway transition curves.
//!
//! The intensity behind a slit is the squared length of a chord of the Euler
//! spiral. The chord endpoints are given directly as spiral parameters;
//! converting wavelength, distances and slit edges into those parameters is
//! the caller's business.

use crate::curve::{PlanePoint, SampledCurve};
use crate::error::{invalid, Result};
use crate::euler::{clothoid_transition, euler_point, limit_point};

/// One end of a chord on the Euler spiral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChordEnd {
    /// The spiral point at a finite parameter.
    Finite(f64),
    /// The limit point `−(√(π/8), √(π/8))` approached as `t → −∞`.
    LowerLimit,
    /// The limit point `(√(π/8), √(π/8))` approached as `t → +∞`.
    UpperLimit,
}

impl ChordEnd {
    /// `±∞` map to the limit points; NaN is rejected.
    pub fn from_parameter(t: f64) -> Result<Self> {
        if t.is_nan() {
            Err(invalid("chord parameter must not be NaN"))
        } else if t == f64::NEG_INFINITY {
            Ok(ChordEnd::LowerLimit)
        } else if t == f64::INFINITY {
            Ok(ChordEnd::UpperLimit)
        } else {
            Ok(ChordEnd::Finite(t))
        }
    }

    fn rank(self) -> f64 {
        match self {
            ChordEnd::Finite(t) => t,
            ChordEnd::LowerLimit => f64::NEG_INFINITY,
            ChordEnd::UpperLimit => f64::INFINITY,
        }
    }

    pub fn point(self) -> Result<PlanePoint> {
        match self {
            ChordEnd::Finite(t) => euler_point(t),
            ChordEnd::LowerLimit => limit_point(-1),
            ChordEnd::UpperLimit => limit_point(1),
        }
    }
}

/// Ordered pair of spiral parameters selected by the slit geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitChord {
    start: ChordEnd,
    end: ChordEnd,
}

impl SlitChord {
    pub fn new(start: ChordEnd, end: ChordEnd) -> Result<Self> {
        if let ChordEnd::Finite(t) = start {
            if !t.is_finite() {
                return Err(invalid(format!("finite chord end expected, got {t}")));
            }
        }
        if let ChordEnd::Finite(t) = end {
            if !t.is_finite() {
                return Err(invalid(format!("finite chord end expected, got {t}")));
            }
        }
        if start.rank() > end.rank() {
            return Err(invalid(format!(
                "chord start {start:?} lies beyond its end {end:?}"
            )));
        }
        Ok(SlitChord { start, end })
    }

    /// From raw parameters, `−∞`/`+∞` standing for the limit points.
    pub fn from_parameters(t1: f64, t2: f64) -> Result<Self> {
        Self::new(ChordEnd::from_parameter(t1)?, ChordEnd::from_parameter(t2)?)
    }

    /// Both ends at the limit points: an unobstructed aperture.
    pub fn open_aperture() -> Self {
        SlitChord {
            start: ChordEnd::LowerLimit,
            end: ChordEnd::UpperLimit,
        }
    }

    pub fn start(&self) -> ChordEnd {
        self.start
    }

    pub fn end(&self) -> ChordEnd {
        self.end
    }
}

/// Squared distance between two spiral points, in either order.
pub fn chord_intensity(a: ChordEnd, b: ChordEnd) -> Result<f64> {
    Ok((b.point()? - a.point()?).norm_sqr())
}

/// Unnormalized intensity `|P₂ − P₁|²`; the open aperture gives `π`.
pub fn slit_intensity(c: &SlitChord) -> Result<f64> {
    chord_intensity(c.start, c.end)
}

/// [`slit_intensity`] for each chord, in order.
pub fn intensity_profile(chords: &[SlitChord]) -> Result<Vec<f64>> {
    if chords.is_empty() {
        return Err(invalid("intensity profile needs at least one chord"));
    }
    chords.iter().map(slit_intensity).collect()
}

/// Track transition from straight running into a bend: curvature grows at
/// `curvature_rate` per unit length over `length`.
pub fn track_transition(curvature_rate: f64, length: f64, samples: usize) -> Result<SampledCurve> {
    clothoid_transition(curvature_rate, length, samples)
}
