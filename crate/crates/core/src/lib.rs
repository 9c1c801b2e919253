// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

//! Flattened orange-peel spirals and their Euler-spiral limit.
//!
//! Cut the skin of a unit sphere along a spiral strip of width `1/N`, lay it
//! flat, and the resulting curve is
//! `z(t) = ∫₀ᵗ exp(−i√((2πN)² − u²)) du` for `t ∈ [−2πN, 2πN]`. Rescaled by
//! `√(4πN)`, it converges to the Euler spiral `(C(t), S(t))` built from the
//! Fresnel integrals `∫₀ᵗ cos u² du` and `∫₀ᵗ sin u² du`.
//!
//! Modules:
//!
//! * [`quadrature`]: adaptive Gauss–Kronrod integration.
//! * [`euler`]: Fresnel integrals, Euler spiral, clothoid transitions.
//! * [`peel`]: the flattened peel and the sphere-zone geometry behind it.
//! * [`convergence`]: measured distance between the two curves.
//! * [`applications`]: slit-diffraction intensity and track transitions.
//! * [`cli`]: the `peelspiral` command line, CSV and SVG output.

pub mod applications;
pub mod cli;
pub mod convergence;
pub mod curve;
mod ddouble;
pub mod error;
pub mod euler;
pub mod peel;
pub mod quadrature;

pub use curve::{CurveFrame, PlanePoint, SampledCurve};
pub use error::{Error, Result};
pub use euler::FresnelValue;
pub use quadrature::{QuadratureResult, QuadratureSpec};
