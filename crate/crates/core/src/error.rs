//! Error type shared across the solver suite.

use thiserror::Error;

/// Errors produced by solvers, tracers and the experiment harness.
#[derive(Debug, Error)]
pub enum TransportError {
    /// An input that must be a finite real number was NaN or infinite.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    /// Both wave speeds are zero where at least one must be nonzero.
    #[error("degenerate wave speeds: |a_left| + |a_right| = 0")]
    DegenerateSpeeds,

    /// A time step that would violate the stability bound of the scheme.
    #[error("stability violation: {what} = {value:e} exceeds the stable limit {limit:e}")]
    Stability {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    /// The requested operation is not defined for this sign configuration.
    #[error("unsupported case: {0}")]
    UnsupportedCase(&'static str),

    /// The adaptive integrator would need a step below the underflow guard.
    #[error("stiff integration: required step {step:e} below {min_step:e}")]
    StepUnderflow { step: f64, min_step: f64 },

    /// Malformed arguments or configuration.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, TransportError>;
