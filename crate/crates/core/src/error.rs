use std::path::PathBuf;

use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = HurwitzError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HurwitzError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("Hurwitz numbers are indexed by nonempty profiles")]
    EmptyProfile,

    #[error("size mismatch: {lambda} has size {}, {mu} has size {}", lambda.size(), mu.size())]
    SizeMismatch { lambda: Partition, mu: Partition },

    #[error("{mu} is not a partition of {d}")]
    NotAPartitionOf { mu: Partition, d: u32 },

    #[error("negative ramification count {0}")]
    NegativeRamification(i64),

    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    #[error("oracle work bound exceeded: {work} tuples > limit {limit}")]
    WorkBoundExceeded { work: String, limit: u64 },

    #[error("method {method} does not apply to g = {g}, mu = {mu}")]
    MethodMismatch {
        method: String,
        g: u32,
        mu: Partition,
    },

    #[error("cache conflict at g = {g}, mu = {mu}: {existing} vs {incoming}")]
    CacheConflict {
        g: u32,
        mu: Partition,
        existing: String,
        incoming: String,
    },

    #[error("{path}:{line}: malformed cache record: {reason}")]
    MalformedCache {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
