use thiserror::Error;

/// Errors produced by the poset and root-system machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("simple root index {index} out of range 1..={rank}")]
    InvalidIndex { index: usize, rank: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("poset is not graded: {0}")]
    NotGraded(String),

    #[error("enumeration bound exceeded: more than {bound} lower ideals (bound may be raised with GRADPOS_MAX_IDEALS)")]
    ResourceLimit { bound: usize },

    #[error("integer overflow: {0}")]
    Overflow(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
