use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at a primitive {0}-th root of unity")]
    PoleAtZeta(u32),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("node ({0},{1}) is not removable")]
    NotRemovable(usize, usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension {dim} exceeds the limit {limit}")]
    DimensionLimit { dim: usize, limit: usize },
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("malformed json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
