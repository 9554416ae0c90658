use thiserror::Error;

/// Errors raised by the library.
///
/// The variants separate mathematically undefined inputs (`Domain`,
/// `Precondition`, `Parse`) from inputs that are well defined but exceed a
/// hard computational bound (`Capacity`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub(crate) fn capacity(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::Capacity {
            what,
            limit,
            actual,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
