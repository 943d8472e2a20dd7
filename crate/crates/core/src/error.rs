//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A step word violates its family geometry (boundary or endpoint).
    #[error("invalid {family} word {word:?}: {reason}")]
    InvalidWord {
        family: &'static str,
        word: String,
        reason: String,
    },

    /// An operation was applied to a path of the wrong family.
    #[error("expected a {expected} path, got {got}")]
    WrongFamily {
        expected: &'static str,
        got: &'static str,
    },

    /// A parameter is outside the declared domain of an operation.
    #[error("parameter out of domain: {0}")]
    OutOfDomain(String),

    /// Exact monomial division failed (some term lacks the divisor power).
    #[error("exact division by {var}^{pow} failed: term with exponent {found}")]
    DivisionUnderflow { var: char, pow: u32, found: u32 },

    /// The requested equation has no weighted path expansion.
    #[error("equation {0} has no path expansion")]
    NoPathExpansion(String),

    /// A solver failed to satisfy its defining equation (non-triangular input).
    #[error("equation {0} is not triangular: residual nonzero at order {1}")]
    NotTriangular(String, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
