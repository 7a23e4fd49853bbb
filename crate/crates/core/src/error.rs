use thiserror::Error;

/// Errors raised by the exact algebra and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The operation is not available for this kind of algebra.
    #[error("unsupported for this algebra: {0}")]
    Unsupported(&'static str),
    /// A size or search guard tripped.
    #[error("resource limit: {0}")]
    Resource(String),
    /// A linear map expected to be invertible is singular.
    #[error("rank error: {0}")]
    Rank(String),
    /// A map is not a member of the expected group.
    #[error("membership error: {0}")]
    Membership(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
