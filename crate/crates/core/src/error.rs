use thiserror::Error;

/// Library-wide error type. The CLI maps each variant onto a stable exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input files or JSON (CLI exit 2).
    #[error("parse error: {0}")]
    Parse(String),

    /// Arguments violating an operation's preconditions (CLI exit 3).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A required separation certificate could not be established (CLI exit 3).
    #[error("certificate missing: {0}")]
    CertificateMissing(String),

    /// Request outside an engine's supported regime (CLI exit 4).
    #[error("unsupported mode: {0}")]
    Unsupported(String),

    /// Too few usable points/scales/entries to estimate anything (CLI exit 5).
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Size caps or epsilon budgets exceeded (CLI exit 6).
    #[error("resource budget exceeded: {0}")]
    Resource(String),

    /// Internal numerical invariant broke; indicates a bug or degenerate input (CLI exit 3).
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable process exit code contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::InvalidInput(_) | Error::CertificateMissing(_) | Error::Numerical(_) => 3,
            Error::Unsupported(_) => 4,
            Error::InsufficientData(_) => 5,
            Error::Resource(_) => 6,
        }
    }
}
