use thiserror::Error;

/// Errors surfaced by the library and mapped to CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    /// Expression could not be parsed; `pos` is a 0-based byte offset.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A computation exceeded the configured size cap.
    #[error("resource cap exceeded for {what} at (n={n}, degree={degree})")]
    Resource { what: String, n: usize, degree: usize },

    /// Parameters outside the defined range of an operation.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A caller violated an operation contract (e.g. non-cocycle input).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code: 2 parse, 3 resource cap, 4 fixture failure, 1 other.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::Resource { .. } => 3,
            _ => 1,
        }
    }
}
