use thiserror::Error;

/// Errors produced by the sequence/matrix calculus and the simplicial
/// constructions.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("join of two sequences with unbounded support")]
    BothInfinite,
    #[error("sum over an unbounded index set: {0}")]
    DivergentSum(String),
    #[error("operation requires a sequence with finite support")]
    InfiniteInput,
    #[error("cannot compare sequences with unknown tails")]
    UnknownTailComparison,
    #[error("matrix has a zero diagonal entry at index {0}")]
    SingularDiagonal(i64),
    #[error("matrix is not flagged triangular")]
    NotTriangular,
    #[error("co-semi-simplicial object is not regular")]
    NonRegular,
    #[error("vertex {vertex} out of range for ambient simplex of dimension {ambient}")]
    VertexOutOfRange { vertex: i64, ambient: i64 },
    #[error("semi-simplicial validation failed: {0}")]
    Validation(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
