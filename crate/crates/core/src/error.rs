use crate::tensorcat::Obj;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: Obj, found: Obj },
    #[error("matrix shape {rows}x{cols} does not fit {cod} <- {dom}")]
    ShapeMismatch {
        dom: Obj,
        cod: Obj,
        rows: usize,
        cols: usize,
    },
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("graded braiding needs graded objects, got {0}")]
    MissingGrading(Obj),
    #[error("not invertible: linear system of size {size} has rank {rank}")]
    NotInvertible { rank: usize, size: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("antipode is not an invertible matrix")]
    AntipodeNotInvertible,
    #[error("convolution inverse of alpha is unavailable: {0}")]
    BetaUnavailable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the beta-tilde comultiplicativity condition fails")]
    StarConditionFailed,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid skew brace: {0}")]
    InvalidSkewBrace(String),
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
}
