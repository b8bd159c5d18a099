use thiserror::Error;

use crate::rootdata::Letter;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {letter}")]
    InvalidRank { letter: Letter, rank: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("expected {expected} coordinates, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("negative coordinate {value} at position {position}")]
    NegativeCoordinate { position: usize, value: i64 },

    #[error("{weight} is not selfdual for {context}")]
    NotSelfdual { weight: String, context: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("resource limit exceeded: {needed} work items, limit {limit}")]
    ResourceLimit { needed: u128, limit: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed. Always an engine bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
