use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("value {value} outside of range 1..={max}")]
    OutOfRange { value: usize, max: usize },

    #[error("{needed} parts do not fit into {available} positions")]
    TooFewPositions { needed: usize, available: usize },

    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },

    #[error("tableau is not standard")]
    NotStandard,

    #[error("not quasisymmetric: coefficient of {left} differs from {right}")]
    NotQuasisymmetric { left: String, right: String },

    #[error("need at least {needed} variables, polynomial has {available}")]
    InsufficientVariables { needed: usize, available: usize },

    #[error("no row of length {0}")]
    NoRowOfLength(usize),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("mixed bases: {0} and {1}")]
    BasisMismatch(String, String),
}

impl Error {
    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            kind,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
