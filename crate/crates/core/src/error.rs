use thiserror::Error;

/// Errors raised by the algebra, adele and K-theory routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator index {0}")]
    InvalidIndex(i64),

    #[error("the flip f is not available in Q_N mode")]
    FlipInNMode,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expectation F needs an element with n = m in every monomial (got {0})")]
    Domain(String),

    #[error("insufficient precision at p = {prime}: need {needed} digits, have {available}")]
    InsufficientPrecision {
        prime: u64,
        needed: u32,
        available: u32,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the extension in the six-term sequence is not determined: {0}")]
    ExtensionAmbiguous(String),

    #[error("query needs {needed} stages but only {available} are materialized")]
    InsufficientStages { needed: usize, available: usize },

    #[error("colimit did not stabilize within the materialized stages: {0}")]
    NotStabilized(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
