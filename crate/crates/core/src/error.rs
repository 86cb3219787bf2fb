use thiserror::Error;

/// Errors raised by parsing, evaluation and the brute-force oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: negative literal -{var}; only positive polarity is supported")]
    NegativeLiteral { line: usize, var: usize },
    #[error("variable {var} out of range 1..={num_vars}")]
    VarOutOfRange { var: usize, num_vars: usize },
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{num_vars} variables exceed the limit of {limit}")]
    TooManyVars { num_vars: usize, limit: usize },
    #[error("clause limit of {cap} exceeded while expanding an LPB into a DNF")]
    ClauseCap { cap: usize },
    #[error("coefficient {0} does not fit into a 64-bit integer")]
    Overflow(String),
    #[error("negative coefficient {value} for variable {var}")]
    NegativeCoefficient { var: usize, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
