use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid coalgebra: {0}")]
    InvalidCoalgebra(String),

    #[error("invalid comodule: {0}")]
    InvalidComodule(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("enumeration budget exceeded: {needed} > {budget}")]
    EnumerationBudgetExceeded { needed: String, budget: u64 },

    #[error("operation requires a finite field, got {0}")]
    FieldNotFinite(FieldSpec),

    #[error("subspace is not fully invariant")]
    NotFullyInvariant,

    #[error("irreducibility test inconclusive after {attempts} candidate elements")]
    Inconclusive { attempts: usize },

    #[error("cannot parse scalar {text:?} over {field}")]
    ScalarParse { text: String, field: FieldSpec },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::EnumerationBudgetExceeded { .. })
    }
}
