use thiserror::Error;

/// Errors produced by graph construction, parsing and the exact search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices; at most {max} are supported here")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid graph6 string")]
    Graph6(#[from] Graph6Error),

    /// An exponential routine was called on a graph above its size guard.
    #[error("{operation} is limited to n <= {max}, got n = {n}")]
    GuardExceeded {
        operation: &'static str,
        n: usize,
        max: usize,
    },

    #[error("automorphism group has more than {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("candidate chromatic number {k} outside 1..={n}")]
    CandidateOutOfRange { k: usize, n: usize },

    #[error("graph is not a Type 1 NG-graph")]
    NotTypeOne,

    #[error("automorphism set was computed on a graph with {expected} vertices, not {found}")]
    GroupMismatch { expected: usize, found: usize },

    #[error("invalid blueprint: {0}")]
    InvalidBlueprint(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes for n = {n}, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("{0} unexpected trailing bytes")]
    TrailingData(usize),
    #[error("{0} padding bits in the last byte are not zero")]
    NonZeroPadding(usize),
    #[error("header declares {0} vertices, which exceeds the 64-vertex limit")]
    TooLarge(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
