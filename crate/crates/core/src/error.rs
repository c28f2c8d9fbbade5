use thiserror::Error;

use crate::algebra::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("variable {0} is not in the ring")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("diagram does not fit: {0}")]
    DiagramBounds(String),
    #[error("cell is not strictly southeast of the minor: {0}")]
    NotSoutheast(String),
    #[error("base case reached: {0}")]
    BaseCase(String),
    #[error("resource limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("complex too large: {0} vertices (at most 128 supported)")]
    TooManyVertices(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
