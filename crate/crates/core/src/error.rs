use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("{perm} is not a minimal coset representative for shape {shape}")]
    NotMinimal { perm: String, shape: String },
    #[error("V^X membership is not characterized for shape {0}")]
    UnsupportedShape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("not an integral Gelfand-Cetlin pattern: {0}")]
    InvalidPattern(String),
    #[error("edge {0} is not effective")]
    NotEffective(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
