use thiserror::Error;

/// Errors raised by twin-group operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TwinError {
    #[error("generator index {index} out of range for rank {rank} (expected 1..={max})", max = rank.saturating_sub(1))]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank {0} is not supported here (expected {1})")]
    UnsupportedRank(usize, &'static str),
    #[error("virtual letter r{0} is not allowed in a twin-group word")]
    VirtualLetter(usize),
    #[error("word {0} is not pure: its permutation image is nontrivial")]
    NotPure(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("side pairing is not a perfect matching: {0}")]
    NonMatchingPairing(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = TwinError> = std::result::Result<T, E>;
