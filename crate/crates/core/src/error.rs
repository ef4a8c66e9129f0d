use crate::pbpoly::VarId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,

    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    #[error("assignment is missing variable {0}")]
    MissingVariable(VarId),

    #[error("too many auxiliary variables to enumerate: {found} exceeds the limit of {limit}")]
    TooManyAux { found: usize, limit: usize },

    #[error("instance too large for exhaustive checking: {found} original variables exceeds the limit of {limit}")]
    TooLarge { found: usize, limit: usize },

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no records to summarize")]
    EmptyInput,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("reduced polynomial is not equivalent to its source: {0}")]
    NotEquivalent(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
