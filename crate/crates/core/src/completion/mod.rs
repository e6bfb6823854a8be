//! Feasibility of row completions with prescribed partial eigenstructure.
//!
//! Every predicate takes the eigenstructure of the matrix being completed,
//! so it can be used on invariants alone without a concrete matrix.

mod chains;
mod predicates;
mod types;
mod witness;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use chains::{construct_beta_chain, construct_f_chain, construct_gamma_chain};
pub use predicates::{build_ab_alt, build_ab_full, check, check_column, check_full, check_full_alt};
pub use types::{
    Chain, ChainConstruction, Condition, FeasibilityReport, NamedSeq, NamedValue, Prescription, Targets, Variant,
};
pub use witness::{witness_to_full, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("invalid prescription: {0}")]
    InvalidPrescription(String),
    #[error("expected a {expected} prescription, found {found}")]
    WrongVariant { expected: Variant, found: Variant },
    #[error("prescription is not feasible")]
    NotFeasible,
    #[error("field obstruction: {0}")]
    FieldObstruction(AlgebraError),
    #[error("assembled full prescription is inconsistent: {0}")]
    AssemblyMismatch(String),
}
