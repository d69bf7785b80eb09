use thiserror::Error;

/// Errors raised by graph parsing, group enumeration, basis construction,
/// the decision procedure and witness construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),

    #[error("unknown component id {0}")]
    UnknownComponent(usize),

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("partition is inconsistent with the graph: {0}")]
    InconsistentPartition(String),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Galois datum: {0}")]
    InvalidDatum(String),

    #[error("nilpotency class must be at least 2, got {0}")]
    ClassTooSmall(usize),

    #[error("real-form decision requires tau = id")]
    TauNotIdentity,

    #[error("bracketing triangularity violated: {0}")]
    Triangularity(String),

    #[error("not Anosov: {0}")]
    NotAnosov(String),

    #[error("unsupported component degree {0}")]
    UnsupportedDegree(usize),

    #[error("unit assignment mismatch: {0}")]
    AssignmentMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("induced map is not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("exponent search exhausted after {0} candidates")]
    SearchExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
