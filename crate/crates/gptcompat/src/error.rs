use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point list")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands live on different state spaces")]
    MismatchedSpaces,

    #[error("functional is negative at a vertex but must be non-negative")]
    NegativeFunctional,

    #[error("functional vanishes on the whole space but must be nonzero")]
    ZeroFunctional,

    #[error("not an effect: values at vertices leave [0, 1]")]
    NotAnEffect,

    #[error("invalid measurement: {0}")]
    InvalidMeasurement(String),

    #[error("invalid decomposition instance: {0}")]
    InvalidInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
