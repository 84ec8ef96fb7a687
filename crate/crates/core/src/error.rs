use thiserror::Error;

/// Errors raised by the engine.
///
/// `Input` covers malformed presentations, dimension mismatches and bounds
/// that are too small. `Refusal` is returned when a request reaches past the
/// range that the truncated computation has certified; the request itself is
/// well formed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("refused: {0}")]
    Refusal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn refusal(msg: impl Into<String>) -> Self {
        Error::Refusal(msg.into())
    }

    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Refusal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
