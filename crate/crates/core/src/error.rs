use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("composition mismatch: {0}")]
    Composition(String),

    #[error("objects live over different spaces")]
    SpaceMismatch,

    #[error("shape mismatch at simple `{label}`: expected {expected:?}, got {got:?}")]
    Shape {
        label: String,
        expected: (usize, usize),
        got: (usize, usize),
    },

    #[error("endpoint mismatch: {0}")]
    Endpoints(String),

    #[error("morphism is not invertible at simple `{label}`")]
    NotInvertible { label: String },

    #[error("validation failed for {identity} (max violation {violation:.3e})")]
    Validation { identity: String, violation: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("group is not abelian: {0}")]
    NotAbelian(String),

    #[error("object is not simple (commutant dimension {0})")]
    NotSimple(usize),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("type error: {0}")]
    Type(String),

    #[error("crossing `{0}` is not available in ambient dimension 2")]
    Ambient(String),

    #[error("n = {0} exceeds the symmetric-group enumeration cap")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn validation(identity: impl Into<String>, violation: f64) -> Self {
        Error::Validation {
            identity: identity.into(),
            violation,
        }
    }
}
