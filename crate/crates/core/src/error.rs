use thiserror::Error;

/// Errors raised by the combinatorial constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested rank exceeds the enumeration guard.
    #[error("size guard exceeded: {what} allows at most {max}, got {got}")]
    Size {
        what: &'static str,
        max: usize,
        got: usize,
    },

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed (e.g. a non-exact polynomial division).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn parse(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub(crate) fn guard(what: &'static str, max: usize, got: usize) -> Result<()> {
    if got > max {
        Err(Error::Size { what, max, got })
    } else {
        Ok(())
    }
}
