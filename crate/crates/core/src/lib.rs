//! Exact-arithmetic classification of left-invariant symplectic structures
//! on Lie algebras.
//!
//! The crate provides, over arbitrary-precision rationals:
//!
//! - dense exact matrix algebra (rank, inverse, kernel, LPU decomposition),
//! - the symplectic group toolkit: membership, block generators, the
//!   symplectic QR decomposition `M·S = (I_n, T; *, *)` with `T` strictly
//!   lower triangular, Darboux bases,
//! - Lie algebras as structure-constant tables, with the rank-one solvable
//!   family `RH` and the Heisenberg-plus-abelian family `HEIS`,
//! - closedness (2-cocycle) checks and exact cocycle spaces,
//! - double-coset reduction of `GL(2n, Q)` to explicit representatives with
//!   re-checkable witnesses `(c·phi) · g · S = rep`, Milnor frames, symplectic
//!   classification verdicts and Lagrangian ideals,
//! - omega-orthogonal complements and isotropic/Lagrangian/ideal predicates.
//!
//! Every result is an exact matrix identity; nothing is approximate. All
//! values are immutable after construction and all operations are pure
//! functions, so everything here is safe to use from multiple threads.

pub mod error;
pub mod forms;
pub mod lie;
pub mod matrix;
pub mod moduli;
pub mod scalar;
pub mod subspaces;
pub mod suites;
pub mod symplectic;

pub use error::{Error, Result};
pub use forms::TwoForm;
pub use lie::{Family, LieAlgebra};
pub use matrix::Matrix;
pub use moduli::{MilnorFrame, ReductionWitness, Representative, Verdict};
pub use scalar::Scalar;
pub use subspaces::Subspace;
pub use symplectic::{SymplecticContext, SymplecticQr};
