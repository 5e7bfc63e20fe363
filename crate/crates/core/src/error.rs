//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by graph construction, decoding, scheduling, and config parsing.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violates its documented invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An id refers to an object that does not exist in the graph.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// The exact pairing oracle was handed more defects than its brute-force bound.
    #[error("defect set of size {n} exceeds oracle limit {max}")]
    TooManyDefects { n: usize, max: usize },

    /// A caller broke an API contract (e.g. defect outside its window).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A partition or plan failed its validation checks.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A pipeline worker panicked; the pipeline aborts.
    #[error("pipeline worker panicked: {0}")]
    WorkerPanic(String),

    /// Config file or flag parsing failed.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
