use thiserror::Error;

/// Errors raised by partition constructors, codecs and maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<u64>),

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("part {part} occurs {requested} time(s) in the removal set but only {available} time(s) in the partition")]
    NotContained {
        part: u64,
        requested: u64,
        available: u64,
    },

    /// `index` is 1-based: the first `i` where `λ_i ≢ λ_{i+1} (mod i)`,
    /// or `i = ℓ(λ)` where `λ_ℓ ≢ 0 (mod ℓ)`.
    #[error("not sequentially congruent: congruence fails at index {index}")]
    NotSequentiallyCongruent { index: usize },

    #[error("coefficient vector has a trailing zero: {0:?}")]
    TrailingZero(Vec<u64>),

    #[error("part {part} is not a perfect square")]
    NotSquare { part: u64 },

    #[error("partition is not in the family: {0}")]
    NotInFamily(String),

    #[error("invalid sequence specification: {0}")]
    InvalidSequence(String),

    #[error("sequence term {index} lies beyond the horizon of {horizon} terms")]
    HorizonExceeded { index: usize, horizon: usize },

    #[error("sequence A has repeated terms, so the map is not injective")]
    RepeatedTerms,

    #[error("spec mismatch: {0}")]
    SpecMismatch(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("invalid ideal specification: {0}")]
    InvalidIdeal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
