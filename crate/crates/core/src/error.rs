use thiserror::Error;

/// Errors raised by the analysis toolkit.
///
/// `Inconsistency` is reserved for results that contradict one of the
/// structural theorems the toolkit encodes (commutant is a division algebra,
/// the form table, the Lorentz rigidity statement, ...). Those are either bugs
/// or genuine counterexamples and are never coerced into another variant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("format error: {0}")]
    Format(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
