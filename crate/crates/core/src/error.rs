use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A framework was built or queried with inconsistent data.
    #[error("structural error: {0}")]
    Structural(String),

    #[error("{what} has size {size}, above the cap of {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("CAF line {line}: {message}")]
    CafSyntax { line: usize, message: String },

    /// The reduction requires a formula free of tautological clauses.
    #[error("clause {index} is tautological")]
    TautologicalClause { index: usize },

    /// A decoded witness failed re-verification. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn dimacs(line: usize, message: impl Into<String>) -> Self {
        Error::Dimacs {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn caf_syntax(line: usize, message: impl Into<String>) -> Self {
        Error::CafSyntax {
            line,
            message: message.into(),
        }
    }
}
