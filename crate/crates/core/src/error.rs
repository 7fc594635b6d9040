use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, BraidError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid parameters: {0}")]
    InvalidArgument(String),

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("malformed braid word token `{0}`")]
    Parse(String),

    #[error("braid is pure; no intermediate subgroup certificate exists for it")]
    PureBraid,

    #[error("cycle types differ: {0} vs {1}")]
    CycleTypeMismatch(String, String),

    #[error("handle reduction exceeded its budget of {0} steps")]
    StepBudgetExceeded(usize),
}
