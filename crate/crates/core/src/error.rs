use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("{0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("index {index} outside [1, {n}]")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("enumeration length {requested} exceeds bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("subset construction exceeded the cap of {cap} states")]
    StateCapExceeded { cap: usize },

    #[error("expression uses {0}; compile it with compile_extended instead")]
    UnsupportedOperator(&'static str),

    #[error("invalid hyperedge: {0}")]
    InvalidEdge(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("challenge exhausted after {used} pairs; {wanted} valid draws needed")]
    ChallengeExhausted { used: usize, wanted: usize },

    #[error("empty sample")]
    EmptySample,
}

pub type Result<T> = std::result::Result<T, Error>;
