use thiserror::Error;

/// Errors produced by ring arithmetic, bundle operations and pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid Grassmannian Gr({r},{n}): need 0 < r < N")]
    InvalidGrassmannian { r: u32, n: u32 },

    #[error("partition {partition} does not fit the {rows}x{cols} box of the Grassmannian")]
    OutOfBox {
        partition: String,
        rows: u32,
        cols: u32,
    },

    #[error("incompatible ambient rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("Chern class index {index} exceeds rank {rank}")]
    RankExceeded { index: usize, rank: usize },

    #[error("rank {rank} ≠ dim {dim}")]
    RankDimMismatch { rank: usize, dim: usize },

    #[error("polynomial is not symmetric: leading exponent {0:?} is not weakly decreasing")]
    NotSymmetric(Vec<u32>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not supported: {0}")]
    Unsupported(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),

    #[error("cache i/o: {0}")]
    Cache(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::Cache(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
