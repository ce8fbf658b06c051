use thiserror::Error;

/// Errors produced by index construction, queries and input parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty text has no period")]
    EmptyText,
    #[error("empty pattern")]
    EmptyPattern,
    #[error("{what} {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("automaton built over the {actual} pattern, expected {expected}")]
    WrongDirection {
        expected: &'static str,
        actual: &'static str,
    },
    #[error("node {id:?} has an empty label")]
    EmptyLabel { id: String },
    #[error("duplicate {side} node id {id:?}")]
    DuplicateId { side: char, id: String },
    #[error("edge endpoint {index} is not a {side} node")]
    BadEndpoint { side: char, index: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(what: &'static str, value: i64, lo: i64, hi: i64) -> Error {
    Error::OutOfRange {
        what,
        value,
        lo,
        hi,
    }
}
