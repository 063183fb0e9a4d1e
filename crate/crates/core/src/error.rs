//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the exact linear algebra and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operand dimensions do not match the operation's contract.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A square matrix required to be invertible has determinant zero.
    #[error("matrix is singular")]
    SingularMatrix,
    /// A Type-1 generator payload must be symmetric.
    #[error("matrix is not symmetric")]
    NotSymmetric,
    /// A matrix required to be skew-symmetric is not.
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    /// A Type-3 generator payload or split input must be a permutation matrix.
    #[error("matrix is not a permutation matrix")]
    NotPermutation,
    /// A dimension parameter is outside the operation's admissible range.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    /// A 2-form required to be nondegenerate has vanishing top power.
    #[error("2-form is degenerate")]
    DegenerateForm,
    /// The requested operation is only defined for the named families.
    #[error("operation is not supported for this family")]
    UnsupportedFamily,
    /// Spanning vectors handed to a subspace are linearly dependent.
    #[error("vectors are not linearly independent")]
    NotIndependent,
    /// A Milnor frame does not realize the canonical closed bracket profile.
    #[error("frame profile is not the canonical closed one")]
    NotClosedProfile,
    /// Malformed textual input (rational strings, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),
    /// An exact identity that must hold by construction failed to verify.
    /// This always indicates a bug, never bad input.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
