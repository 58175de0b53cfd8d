use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: must be at least 1")]
    InvalidModulus(i64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("empty sequence: at least one block is required")]
    EmptySequence,
    #[error("invalid rank {rank} at block {block}: ranks must be positive")]
    InvalidRank { block: usize, rank: i64 },
    #[error("slope-order violation at block {block}: slopes must strictly decrease")]
    SlopeOrder { block: usize },
    #[error("convexity violation at vertex {vertex}")]
    Convexity { vertex: usize },
    #[error("unsupported genus {0}: genus must be at least 1")]
    UnsupportedGenus(i64),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("incomparable context: ({n1},{k1}) vs ({n2},{k2})")]
    IncomparableContext { n1: i64, k1: i64, n2: i64, k2: i64 },
    #[error("ambiguous-bundle: Klein bottle with even rank needs a bundle class (plus or minus)")]
    AmbiguousBundle,
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("oracle refuses input beyond desk-scale limits: {0}")]
    OracleLimit(String),
}
