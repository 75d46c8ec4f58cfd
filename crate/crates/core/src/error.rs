use thiserror::Error;

/// Failures shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("integrality violation: {0}")]
    Integrality(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("odd number of surviving vertices ({0}); no perfect matching can exist")]
    OddVertexCount(usize),
    #[error("no applicable formula: {0}")]
    NoApplicableTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
