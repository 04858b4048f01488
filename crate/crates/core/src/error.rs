use thiserror::Error;

/// Errors raised anywhere in the kernel.
///
/// The variants map onto the CLI exit codes: parse and usage problems are
/// the caller's fault (exit 1), arithmetic/overflow/budget failures are
/// mathematical (exit 2).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("exponent overflow: {0}")]
    Overflow(String),
    #[error("computation budget exceeded: {0}")]
    Budget(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Error::Usage(message.into())
    }

    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Usage(_) | Error::Io(_) => 1,
            Error::Arithmetic(_) | Error::Overflow(_) | Error::Budget(_) => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
