use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("map is not invertible")]
    NotInvertible,

    #[error("map is not idempotent")]
    NotIdempotent,

    #[error("bimonoid has no antipode")]
    NoAntipode,

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("grouplike extraction is incomplete for this comonoid")]
    IncompleteGrouplikes,

    #[error("grouplikes are not closed under {0}")]
    NotClosed(&'static str),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

pub(crate) fn shape(op: &'static str, detail: impl Into<String>) -> AlgebraError {
    AlgebraError::DimensionMismatch {
        op,
        detail: detail.into(),
    }
}
