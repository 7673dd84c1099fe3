use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices, operation supports at most {max}")]
    TooLarge { n: usize, max: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("malformed formula: {0}")]
    MalformedFormula(String),

    #[error("formula has clauses of arity {got}, construction needs {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("switching set contains non-variable vertex {0}")]
    NotVariableOnly(usize),

    #[error("search budget of {0} expansions exceeded")]
    BudgetExceeded(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
