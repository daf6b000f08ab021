use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("constant term {0} is not invertible")]
    NotInvertible(String),

    #[error("recurrence needs matching non-empty coefficients and initial values (got {coeffs} and {init})")]
    Arity { coeffs: usize, init: usize },

    #[error("index ({n}, {k}) outside the table (n_max = {n_max})")]
    IndexOutOfRange { n: usize, k: usize, n_max: usize },

    #[error("{0}")]
    InvalidArgument(String),

    /// An exact division that must leave no remainder did.
    #[error("exact division failed: {0}")]
    NonIntegral(String),

    /// Two independent computation paths disagreed. Always an implementation bug.
    #[error("{what}: paths disagree at index {index}")]
    PathMismatch { what: &'static str, index: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("cannot demote {value} to the {target} domain")]
    Demotion { value: String, target: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
