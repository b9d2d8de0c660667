use thiserror::Error;

/// Errors raised by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division error: {0}")]
    Division(String),

    #[error("polynomial is not expressible in the gamma basis: {0}")]
    NotGammaExpressible(String),

    #[error("unsupported pattern set: {0}")]
    UnsupportedPattern(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
