use crate::report::Report;

/// Errors raised by constructions and by the workbench front end.
///
/// Axiom violations are normally carried by a [`Report`]; an error is only
/// raised when an operation cannot produce its output at all.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid document at `{path}`: {message}")]
    Semantic { path: String, message: String },

    #[error("{what} has size {size}, above the bound {limit}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("{what} rejected: {}", .report.summary())]
    Rejected { what: &'static str, report: Report },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn semantic(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Semantic {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn bound(what: &'static str, size: usize, limit: usize) -> Self {
        Error::BoundExceeded { what, size, limit }
    }

    pub(crate) fn rejected(what: &'static str, report: Report) -> Self {
        Error::Rejected { what, report }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
