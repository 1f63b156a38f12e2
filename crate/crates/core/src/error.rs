use crate::core::TransferDirection;

/// Library-wide error type. Index fields in messages are 1-based, matching
/// all user-facing I/O.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("list must contain at least one entry")]
    EmptyList,

    #[error("lists have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("lists have different sums: {left} vs {right}")]
    SumMismatch { left: usize, right: usize },

    #[error("entry {value} at position {position} exceeds the bound {max}")]
    EntryOutOfRange {
        position: usize,
        value: usize,
        max: usize,
    },

    #[error("a-components must be nonincreasing")]
    NotNonincreasing,

    #[error("{direction:?} transfer ({i},{j}) invalid on this list: {reason}")]
    TransferPrecondition {
        direction: TransferDirection,
        i: usize,
        j: usize,
        reason: String,
    },

    #[error("index pair ({i},{j}) invalid: indices must be distinct and within 1..={n}")]
    IndexPair { i: usize, j: usize, n: usize },

    #[error("row {k} is not an admissible shift row for columns ({i},{j})")]
    InvalidShiftRow { k: usize, i: usize, j: usize },

    #[error("matrix does not satisfy the {0:?} constraints")]
    KindViolation(crate::core::RealizationKind),

    #[error("matrices have different margins")]
    MarginMismatch,

    #[error("size guard exceeded: {actual} > {limit}")]
    GuardExceeded { actual: usize, limit: usize },

    #[error("list is not realizable for the requested kind")]
    Infeasible,

    #[error("matrix dimension {n} out of range (1..={max})")]
    Dimension { n: usize, max: usize },

    #[error("{0} is not a permutation of 1..={1}")]
    InvalidPermutation(String, usize),

    #[error("kind {kind:?} expects {expected}")]
    InputKindMismatch {
        kind: crate::core::RealizationKind,
        expected: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
