use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `position` is a 0-based byte offset.
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not Artinian: module has dimension {0}")]
    NotArtinian(i64),

    #[error("relation contains a cycle through element {0}")]
    CyclicRelation(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::UnknownVariable(_))
    }
}
