use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition part {0}: parts must be positive")]
    InvalidPart(i64),

    #[error("prepend requires lambda_0 >= first part ({lambda0} < {first_part})")]
    PrependTooSmall { lambda0: u64, first_part: u64 },

    #[error("partition {0:?} is not even")]
    OddPartition(Vec<u64>),

    #[error("k must be odd and positive, got {0}")]
    EvenK(u64),

    #[error(
        "n = {n} is below the {parity} threshold; minimal legal n for this parity is {minimal}"
    )]
    BelowThreshold {
        n: u64,
        parity: &'static str,
        minimal: u64,
    },

    #[error("group closure exceeded cap {cap} (found {partial} elements so far)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("generators have mismatched degrees: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("permutation is not an element of the group")]
    NotInGroup,

    #[error("p = {0} is not supported: need an odd prime")]
    BadPslPrime(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
