use thiserror::Error;

use crate::quadrature::QuadratureResult;

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong while evaluating or verifying.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The `(x, s)` pair is not a valid evaluation request.
    #[error("invalid query: {0}")]
    InvalidQuery(&'static str),

    /// An argument or configuration value is outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    /// The series budget ran out before the stopping rule was satisfied.
    #[error(
        "series did not converge within {max_terms} terms (last term magnitude {last_term:e})"
    )]
    NonConvergence {
        /// Term budget that was exhausted.
        max_terms: usize,
        /// Magnitude of the last term computed.
        last_term: f64,
    },

    /// An exact Stirling number does not fit in `u128`.
    #[error("S({n}, {k}) does not fit in 128 bits")]
    Overflow {
        /// Set size.
        n: u32,
        /// Number of blocks.
        k: u32,
    },

    /// A Hadamard evaluation point lies on or outside a radius of convergence.
    #[error("|{value}| is not inside the radius of convergence {radius}")]
    DomainViolation {
        /// Offending point.
        value: f64,
        /// Radius it must stay strictly inside.
        radius: f64,
    },

    /// Node doubling stopped at `max_nodes` without meeting the tolerance.
    #[error(
        "quadrature did not reach tolerance {tol:e}: estimate {:e} at {} nodes",
        best.est_error,
        best.nodes
    )]
    ToleranceNotReached {
        /// Best available result (finest level).
        best: QuadratureResult,
        /// Requested tolerance.
        tol: f64,
    },

    /// A result that must be real carries an imaginary part above the limit.
    #[error("imaginary residue {im:e} exceeds {limit:e}")]
    ImaginaryResidue {
        /// Imaginary part that was produced.
        im: f64,
        /// Allowed magnitude.
        limit: f64,
    },
}
