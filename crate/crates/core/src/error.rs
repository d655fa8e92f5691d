use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested (family, r) regime has no closed-form coloring.
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// The parameters fall in a range the theorem explicitly excludes.
    #[error("excluded case: {0}")]
    ExcludedCase(String),

    #[error("graph too large: {vertices} vertices (limit {limit})")]
    TooLarge { vertices: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_param(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
