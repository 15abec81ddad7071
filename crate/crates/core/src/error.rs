use thiserror::Error;

/// Errors raised by constructions and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("q-exponent {0} is not representable with q = t^{1}")]
    NonRepresentableExponent(String, i64),
    #[error("size mismatch: expected {expected}, got {got}")]
    Mismatch { expected: usize, got: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("missing generator {0}")]
    MissingGenerator(String),
    #[error("matrix for {0} is not diagonal")]
    NonDiagonal(String),
    #[error("module fails relation {0}")]
    RelationFailure(String),
    #[error("operator {0} does not preserve the defining subspace")]
    NotWellDefined(String),
    #[error("irreducibility test inconclusive: {0}")]
    Inconclusive(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
