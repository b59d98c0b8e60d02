use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The input is well-formed but outside the operation's domain
    /// (origin not interior, apex in the affine span, unbounded polyhedron, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("divisor is not nef: {0}")]
    NotNef(String),

    #[error("divisor is not Cartier: {0}")]
    NotCartier(String),

    /// A smoothness (unimodularity) assumption failed.
    #[error("smoothness assumption violated: {0}")]
    NotSmooth(String),

    /// Two routes that must agree did not. Indicates a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
