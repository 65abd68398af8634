use thiserror::Error;

pub type Result<T, E = DslError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("syntax error at {line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax { line: usize, column: usize, expected: Vec<String>, found: String },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("unknown carrier `{0}`")]
    UnknownCarrier(String),

    /// A typing failure, located at the printed sub-term.
    #[error("type error in `{term}`: {message}")]
    Type { term: String, message: String },

    #[error("in `{term}`: {source}")]
    Eval {
        term: String,
        #[source]
        source: multirel::Error,
    },

    #[error("environment: {0}")]
    Env(String),
}

impl DslError {
    pub(crate) fn ty(term: impl ToString, message: impl Into<String>) -> Self {
        DslError::Type { term: term.to_string(), message: message.into() }
    }

    /// The core error behind an evaluation failure, if any.
    pub fn core(&self) -> Option<&multirel::Error> {
        match self {
            DslError::Eval { source, .. } => Some(source),
            _ => None,
        }
    }

    pub fn is_cap(&self) -> bool {
        self.core().is_some_and(multirel::Error::is_cap)
    }
}
