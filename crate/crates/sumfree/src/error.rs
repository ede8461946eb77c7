use std::fmt;

/// Error type shared by all toolkit operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from different ambient groups were combined.
    SpecMismatch,
    /// A precondition of an operation was violated by the caller.
    Usage(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpecMismatch => write!(f, "operands belong to different ambient groups"),
            Error::Usage(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
