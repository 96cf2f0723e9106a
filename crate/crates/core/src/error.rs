//! Error type shared across the crate.

/// Errors reported by the exact engines and the numeric oracle.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A value in Q[sqrt(2)] was expected to be rational but has a nonzero
    /// irrational part. This signals a failed sqrt(2)-cancellation, i.e. an
    /// internal bug, never an expected runtime condition.
    #[error("nonzero sqrt(2) component where a rational was required: {0}")]
    NonRational(String),

    /// An integral or combination spec violates its parity/range rules.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// Parameters outside the mathematical domain of an oracle routine.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature or summation failed to reach the requested tolerance.
    #[error("failed to converge: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
