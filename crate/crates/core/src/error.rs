use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource limit was hit; `progress` describes how far the
    /// computation got.
    #[error("resource limit exceeded: {what} (limit {limit}){progress}")]
    Resource {
        what: String,
        limit: u64,
        progress: String,
    },

    /// A mathematical postcondition failed at runtime.
    #[error("invariant violated: {0}")]
    Invariant(String),

    /// Internal inconsistency in the polynomial engine.
    #[error("engine failure: {0}")]
    Engine(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
            progress: String::new(),
        }
    }
}
