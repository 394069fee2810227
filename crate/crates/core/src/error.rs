use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition literal {0:?}")]
    Parse(String),

    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("size mismatch: |{left}| = {} but |{right}| = {}", left.size(), right.size())]
    SizeMismatch { left: Partition, right: Partition },

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(usize),

    #[error("modulus must be odd, got {0}")]
    EvenModulus(usize),

    #[error("{partition} is not {p}-regular")]
    NotRegular { partition: Partition, p: usize },

    #[error("{partition} is not a {p}-core")]
    NotACore { partition: Partition, p: usize },

    #[error("{0} is not self-conjugate")]
    NotSelfConjugate(Partition),

    #[error("quotient has {got} components, expected {expected}")]
    QuotientLength { expected: usize, got: usize },

    #[error("hypothesis not satisfied at {partition}: {reason}")]
    Hypothesis { partition: Partition, reason: String },

    #[error("invalid operator word: {0}")]
    Word(String),

    #[error("unknown entry at row {row}, column {col}")]
    UnknownEntry { row: String, col: String },

    #[error("malformed matrix: {0}")]
    Matrix(String),

    #[error("invalid basic-set datum: {0}")]
    Datum(String),

    #[error("condition violated: {0}")]
    Condition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(format!("json: {e}"))
    }
}
