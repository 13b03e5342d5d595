use thiserror::Error;

/// Errors raised by the monomial, shelling, h-vector and matroid routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("monomial {0} is not a member of the ideal")]
    Membership(String),

    #[error("{what} exceeds the cap of {cap} (requested {requested})")]
    Size {
        what: &'static str,
        cap: usize,
        requested: u128,
    },

    /// A runtime check of a proven property failed. Signals a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag, used in CLI error documents.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Domain(_) => "domain",
            Error::Membership(_) => "membership",
            Error::Size { .. } => "size",
            Error::Invariant(_) => "invariant",
            Error::Overflow(_) => "overflow",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
