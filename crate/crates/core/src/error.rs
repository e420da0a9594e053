use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The profile `(N, c, d, p)` violates one of its constraints.
    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    /// An identity that must hold exactly did not. This is never a user
    /// error; it means the implementation is wrong.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// The request exceeds the size this operation is built for.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
