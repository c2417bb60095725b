use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("elements belong to different algebra contexts")]
    ContextMismatch,

    #[error("operation requires a numeric dimension d: {0}")]
    SymbolicUnsupported(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no such block: {0}")]
    BlockAbsent(String),

    #[error("Q({0}) is singular at d = {1}; use the f-basis construction")]
    SingularQ(String, u32),

    #[error("operator dimension d^n = {size} exceeds the configured cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("table with {0} rows is too large; restrict the generator set")]
    TableTooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
