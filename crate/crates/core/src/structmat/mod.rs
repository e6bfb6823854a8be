//! Polynomial matrices and their complete eigenstructure.

mod eigen;
mod kernel;
mod matrix;
mod smith;

use thiserror::Error;

pub use eigen::{eigenstructure, Eigenstructure};
pub(crate) use eigen::fmt_seq;
pub use kernel::minimal_indices;
pub use matrix::PolyMatrix;
pub use smith::{infinite_multiplicities, rank, smith_form};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("rows have different lengths")]
    Ragged,
    #[error("column count mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry of degree {degree} exceeds grade {grade}")]
    GradeExceeded { degree: usize, grade: usize },
    #[error("index sum violated: {lhs} != {rhs}")]
    IndexSumViolation { lhs: usize, rhs: usize },
    #[error("invalid eigenstructure: {0}")]
    Invalid(String),
}
