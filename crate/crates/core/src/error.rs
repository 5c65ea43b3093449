use thiserror::Error;

use crate::standard_pairs::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("at most {max} variables are supported, got {found}")]
    TooManyVariables { max: usize, found: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("root support meets the face {0}")]
    SupportOverlap(Face),

    #[error("the unit ideal has no standard monomials")]
    UnitIdeal,

    #[error("no standard pair has face {0}; the component is the unit ideal")]
    FaceAbsent(Face),

    #[error("grading map is not pointed; nonnegative kernel vector {witness:?}")]
    NotPointed { witness: Vec<i64> },

    #[error("vector {0:?} is not in the lattice")]
    OutsideLattice(Vec<i64>),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
