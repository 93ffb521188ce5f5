use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped so callers (the CLI in particular) can map them
/// onto coarse failure classes via [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },

    #[error("malformed Cayley table: {0}")]
    Table(String),

    #[error("{what} of size {requested} exceeds the configured limit {limit}")]
    Capacity {
        what: &'static str,
        requested: String,
        limit: String,
    },

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("subset is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroups {0} and {1} are not comparable")]
    NotComparable(usize, usize),

    #[error("group is not a Dedekind group")]
    NotDedekind,

    #[error("permutation degree {0} must exceed 3")]
    Degree(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("mismatched context: {0}")]
    ContextMismatch(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Capacity,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Table(_) | Error::InvalidArgument(_) | Error::Degree(_) => {
                ErrorKind::Parse
            }
            Error::Capacity { .. } | Error::BudgetExceeded(_) => ErrorKind::Capacity,
            _ => ErrorKind::Internal,
        }
    }

    pub(crate) fn capacity(what: &'static str, requested: impl ToString, limit: impl ToString) -> Self {
        Error::Capacity {
            what,
            requested: requested.to_string(),
            limit: limit.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
