use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),

    #[error("e must be at least 2, got {0}")]
    InvalidE(usize),

    #[error("cannot add a column of length {len} to a partition with {parts} parts")]
    ColumnTooShort { len: usize, parts: usize },

    #[error("partition {partition} is {e}-singular; operator requires an {e}-regular partition")]
    Singular { partition: String, e: usize },

    #[error("partition {partition} is not an L-partition for e = {e}")]
    NotLPartition { partition: String, e: usize },

    #[error("rim walk on {partition} (e = {e}) did not terminate within {cap} steps")]
    RimWalk {
        partition: String,
        e: usize,
        cap: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
