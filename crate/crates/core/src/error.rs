use thiserror::Error;

/// Errors produced by the Brauer engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph specification `{0}` (expected A<n> n>=1, D<n> n>=4, E6, E7 or E8)")]
    InvalidGraph(String),

    #[error("rank {rank} is outside the supported range for type {family}")]
    RankOutOfRange { family: char, rank: usize },

    #[error("invalid word token `{0}` (expected r<i>, e<i>, d or D)")]
    InvalidToken(String),

    #[error("node {node} is out of range for a graph of rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },

    #[error("word contains non-reflection token `{0}`")]
    NotAReflectionWord(String),

    #[error("coefficient vector {0} is not a root")]
    NotARoot(String),

    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),

    #[error("orbit catalog does not match the reference table: {0}")]
    CatalogMismatch(String),

    #[error("group enumeration exceeded the bound of {0} elements")]
    BoundExceeded(usize),

    #[error("module dimension {dim} exceeds the configured limit {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("operation requires a type A graph, got {0}")]
    NotTypeA(String),

    #[error("diagram strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("no orbit with id {0}")]
    UnknownOrbit(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
