//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scenario parameter is outside its physical domain.
    #[error("invalid parameter `{name}`: {reason}")]
    ParameterDomain { name: &'static str, reason: String },

    /// The wavefunction vanishes (to tolerance) at the requested point, so
    /// quantities built from 1/Ψ are undefined. Carries the nearest node of
    /// the scenario, when the node set is nonempty.
    #[error("wavefunction node at x = {x}; nearest node {}", fmt_node(.nearest))]
    NodeProximity {
        x: Complex64,
        nearest: Option<Complex64>,
    },

    /// The scenario has no closed-form trajectory; callers should verify
    /// against the conserved quantity instead.
    #[error("no closed-form trajectory for this scenario; use the constant of motion")]
    NoClosedForm,

    /// Operation requires a normalizable wavefunction (unit L² norm on the
    /// real axis), which plane waves and scattering states do not have.
    #[error("scenario is not normalizable; Born-rule sampling is undefined")]
    NotNormalizable,

    /// Invalid argument to a numerical routine (time span, grid, config).
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },
}

fn fmt_node(nearest: &Option<Complex64>) -> String {
    match nearest {
        Some(n) => format!("{n}"),
        None => "(none: scenario is node-free)".to_string(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
