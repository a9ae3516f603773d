use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("edge rules unavailable: {0}")]
    ProviderMissing(String),
}

impl Error {
    pub fn pre(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Error {
        Error::Parse(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Precondition(_) => 3,
            Error::ProviderMissing(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
