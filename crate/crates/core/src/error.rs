use thiserror::Error;

use crate::label::Label;

/// Errors raised by embedding construction, tracing and surgery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid rotation system: {0}")]
    InvalidSystem(String),

    #[error("graph is disconnected; embedding is not cellular")]
    Disconnected,

    #[error("Euler characteristic {chi} gives a half-integer orientable genus")]
    HalfIntegerGenus { chi: i64 },

    #[error("unknown vertex {0}")]
    UnknownVertex(Label),

    #[error("edge ({0}, {1}) is absent")]
    EdgeAbsent(Label, Label),

    #[error("edge ({0}, {1}) is already present")]
    EdgePresent(Label, Label),

    #[error("surgery precondition failed: {0}")]
    Precondition(String),

    #[error("face {0} not found")]
    FaceNotFound(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("current graph error: {0}")]
    Current(String),

    #[error("fixture missing: {0}")]
    FixtureMissing(String),

    #[error("refused: {0}")]
    Refusal(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("search budget of {0} nodes exhausted")]
    Budget(u64),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit code: 1 verification failure, 2 malformed input,
    /// 3 fixture missing, 4 refusal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) | Error::Budget(_) => 1,
            Error::FixtureMissing(_) => 3,
            Error::Refusal(_) => 4,
            _ => 2,
        }
    }
}
