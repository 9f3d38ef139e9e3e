//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by shape construction, tableau operations and the
/// verification suites.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A shape constraint was violated (partition does not fit a rectangle,
    /// inner shape not contained in outer shape, shapes not nested, ...).
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A cell argument lies outside the shape it should belong to, or is not
    /// a legal hole for the requested slide.
    #[error("invalid cell: {0}")]
    InvalidCell(String),

    /// An input tableau fails the preconditions of an operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A problem instance violates the size equation or does not fit its
    /// rectangle.
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    DomainError(String),

    /// An internal invariant that is guaranteed for valid input was violated.
    /// This indicates a bug, never a bad input.
    #[error("algorithm invariant violated: {0}")]
    InvariantViolation(String),

    /// A string could not be parsed as a partition, rectangle or tableau.
    #[error("parse error: {0}")]
    ParseError(String),

    /// An enumeration exceeded the configured size limit.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
