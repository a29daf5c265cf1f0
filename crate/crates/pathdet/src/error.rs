//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division left a non-zero remainder in a ring where the quotient was
    /// expected to be exact. Signals a bug or a misapplied closed form.
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    /// A binary operation combined values from different rings.
    #[error("mixed ring tags: {0} and {1}")]
    MixedRings(&'static str, &'static str),

    /// A path generating function query violates a precondition.
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    /// An enumeration or expansion exceeds the configured cap.
    #[error("too large: {0}")]
    TooLarge(String),

    /// Parameters outside a family's validity range.
    #[error("bad parameters: {0}")]
    BadParams(String),

    /// A rational prefactor did not divide exactly into an integer entry.
    #[error("non-integral entry: {0}")]
    NonIntegralEntry(String),

    /// A matrix does not have the zero pattern claimed for a checkerboard split.
    #[error("checkerboard pattern violation: {0}")]
    PatternViolation(String),

    /// Two simultaneously matching case branches evaluated to different values.
    #[error("branch conflict: {0}")]
    BranchConflict(String),

    /// A verification grid violates its caps or names an unusable combination.
    #[error("bad grid: {0}")]
    BadGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
