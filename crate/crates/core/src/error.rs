use thiserror::Error;

/// Errors raised by the computation engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("shape constraint violated: {0}")]
    Shape(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("oracle limit exceeded: weight {weight} is above the configured maximum {max}")]
    OracleOverflow { weight: u64, max: u64 },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("empty range: lower end {lo} exceeds upper end {hi}")]
    EmptyRange { lo: i128, hi: i128 },

    #[error("insufficient samples: need at least {needed} values, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error(
        "fit mismatch at N = {n}: fitted value {fitted} differs from sample {sampled}; \
         raise --period or --degree"
    )]
    FitMismatch {
        n: u64,
        fitted: String,
        sampled: String,
    },

    #[error("shape decomposition failed: {0}")]
    ShapeDecomposition(String),

    #[error("parameter error: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
