use thiserror::Error;

use crate::f2::F2Error;

/// Errors raised by code construction, distance computation and surgery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("check matrices are not orthogonal ({violations} offending check pairs)")]
    NotOrthogonal { violations: usize },
    #[error("vector is not a logical operator")]
    NotLogical,
    #[error("logical operator is not irreducible")]
    NotIrreducible,
    #[error("the two logicals are homologous")]
    Homologous,
    #[error("vectors do not form a basis of the logical space")]
    NotAHomologyBasis,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial moduli differ")]
    ModulusMismatch,
    #[error("search space of dimension {dim} exceeds the budget of {budget}")]
    BudgetExceeded { dim: usize, budget: usize },
    #[error("no logicals exist")]
    NoLogicals,
    #[error("invalid inclusion: {0}")]
    InvalidInclusion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
