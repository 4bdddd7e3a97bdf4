//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two fields/traces that must live on the same grid or segment do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Construction rejected (bad sigmas, bad bounds, bad partition, ...).
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    /// A point left the operator's domain box or working ball.
    #[error("iterate escaped the admissible domain: {0}")]
    IterateEscaped(String),

    /// An algebraic guarantee failed at runtime (broken operator or wrong eta).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The sparse linear solver did not reach its tolerance.
    #[error("linear solver failure: {0}")]
    SolverFailure(String),

    /// Estimation had no usable samples.
    #[error("estimation failure: {0}")]
    EstimationFailure(String),

    /// Rejected experiment configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
