//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by geometry, norm certification and search routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A set with zero diameter (single point) or an otherwise unusable shape.
    #[error("degenerate set: {0}")]
    DegenerateSet(String),

    /// Malformed or out-of-range input (bad coordinates, bad parameters).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A sample or evaluation cap was exceeded before the requested
    /// tolerance was reached.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A polynomial handed to `markov_ratio` has zeros outside the set;
    /// distinct from numerical failure so callers can tell a precondition
    /// violation from a certification problem.
    #[error("roots outside set: {0}")]
    RootsOutsideSet(String),

    /// An operation that requires the normalized frame (`d = 2`, `±1 ∈ K`)
    /// was given a set outside it.
    #[error("set not normalized: {0}")]
    NotNormalized(String),
}

pub type Result<T> = std::result::Result<T, Error>;
