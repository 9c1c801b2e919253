// Copyright 2026 the Peelspiral Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::quadrature::QuadratureError;

/// Errors raised by the curve, spiral and convergence routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A curve parameter fell outside the domain where the operation is defined.
    #[error("parameter {value} outside the allowed domain: {bound}")]
    OutOfDomain { value: f64, bound: String },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn require_finite(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(invalid(format!("{name} must be finite, got {value}")))
    }
}
