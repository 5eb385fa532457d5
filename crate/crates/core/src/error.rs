use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid scalar literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("binomial parameters require r + s != 0")]
    DegenerateBinomial,

    #[error("inverse operators require r != 0")]
    ZeroR,

    #[error("lambda must be positive and strictly increasing; violated at index {index}")]
    LambdaNotIncreasing { index: usize },

    #[error("lambda sequence must contain at least one term")]
    EmptyLambda,

    #[error("truncation order {requested} exceeds the operator's extent {extent}")]
    ExtentExceeded { requested: usize, extent: usize },

    #[error("truncation order must be at least 1")]
    EmptyTruncation,

    #[error("truncation order {requested} exceeds the cap {cap}")]
    TruncationCap { requested: usize, cap: usize },

    #[error("singular diagonal entry at index {0}")]
    SingularDiagonal(usize),

    #[error("gamma function pole at {0}")]
    GammaPole(f64),

    #[error("index {index} is outside the window of length {len}")]
    IndexOutOfWindow { index: usize, len: usize },

    #[error("window lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("exponent p must be >= 1, got {0}")]
    InvalidExponent(f64),

    #[error("line {line}: {message}")]
    Line { line: usize, message: String },

    #[error("{0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
