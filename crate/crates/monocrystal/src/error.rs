use thiserror::Error;

/// Errors surfaced by monomial, matrix, tableau, and crystal operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A node index, row letter, or column fell outside the valid range
    /// for the ambient rank.
    #[error("index {got} out of range {min}..={max} ({what})")]
    IndexOutOfRange {
        what: &'static str,
        got: i64,
        min: i64,
        max: i64,
    },

    /// Two objects that must share a type family and rank do not.
    #[error("mismatched types: {left} vs {right}")]
    SpecMismatch { left: String, right: String },

    /// A coordinate vector had the wrong length for the rank.
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A weight that must be dominant (all coordinates >= 0) was not.
    #[error("weight {0} is not dominant")]
    NonDominant(String),

    /// Crystal exploration exceeded the node cap.
    #[error("component exploration exceeded the node cap of {0}")]
    CapExceeded(usize),

    /// A crystal graph has more than one source node, so no canonical
    /// highest-weight element exists.
    #[error("graph has multiple source nodes: {0:?}")]
    MultipleSources(Vec<String>),

    /// An operator produced or received a matrix that is not fully reduced.
    #[error("matrix is not reduced: {0}")]
    ReductionViolated(String),

    /// Applying an operator and then its inverse did not return the
    /// original element.
    #[error("inverse law failed for operator index {index}: {detail}")]
    InverseLawViolated { index: usize, detail: String },

    /// A lower decomposition produced parts that are inconsistent with the
    /// whole (entrywise bound or column-count bound broken).
    #[error("lower decomposition inconsistent: {0}")]
    DecompositionOverlap(String),

    /// Compression failed to reach a normalized matrix within the
    /// iteration bound.
    #[error("compression did not terminate within {0} steps")]
    NonTermination(usize),

    /// A rewriting rule was applied at a position where its preconditions
    /// do not hold.
    #[error("rule precondition failed: {0}")]
    RulePrecondition(String),

    /// Text input could not be parsed.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An internal consistency check failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: internal invariant breakage maps to 3,
    /// everything else (bad input or unusable state) to 1. Exit code 2 is
    /// reserved for verification verdicts produced by the CLI itself.
    #[must_use]
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ReductionViolated(_)
            | Error::InverseLawViolated { .. }
            | Error::Invariant(_)
            | Error::DecompositionOverlap(_)
            | Error::NonTermination(_)
            | Error::MultipleSources(_) => 3,
            _ => 1,
        }
    }
}
