// Copyright 2026 The mbqed authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

use crate::radiative::RadiativeResult;

/// Errors raised by the physical model, the numerics and the command-line front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Dipole coupling too strong: some normal-mode frequency would be imaginary.
    #[error("invalid regime: |2γ| = {two_gamma:.6e} must be < 1")]
    InvalidRegime { two_gamma: f64 },

    /// The adaptive quadrature ran out of subdivisions. The best estimate is kept.
    #[error(
        "tolerance not met: value {:.6e} with error estimate {:.3e} after {} evaluations",
        .best.value, .best.abs_error_estimate, .best.n_evals
    )]
    ToleranceNotMet { best: RadiativeResult },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("value at index {index} is not strictly positive ({value:e})")]
    NonPositiveValue { index: usize, value: f64 },

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter { name, reason: reason.into() }
}
