use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(&'static str),

    #[error("point {index} is the zero vector")]
    ZeroPoint { index: usize },

    #[error("points {first} and {second} are projectively equal")]
    DuplicatePoints { first: usize, second: usize },

    #[error("a point set needs at least one point")]
    EmptyPointSet,

    #[error("linear form vanishes at point {index}, so it is not regular")]
    NotRegular { index: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
