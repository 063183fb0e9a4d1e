//! Subspaces, omega-orthogonal complements and the isotropic / Lagrangian /
//! subalgebra / ideal predicates.
//!
//! Membership is decided by exact row reduction against the subspace basis;
//! there is no tolerance parameter anywhere.

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::forms::TwoForm;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A linear subspace of `Q^{2n}` spanned by independent column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    /// Builds a subspace from spanning vectors, which must be independent.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(Error::ShapeMismatch(format!(
                    "basis vector has length {}, ambient dimension is {ambient_dim}",
                    v.len()
                )));
            }
        }
        if !basis.is_empty() {
            let m = basis_matrix(ambient_dim, &basis);
            if m.rank() != basis.len() {
                return Err(Error::NotIndependent);
            }
        }
        Ok(Self { ambient_dim, basis })
    }

    /// The zero subspace.
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Basis vectors as the columns of a `2n x k` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        basis_matrix(self.ambient_dim, &self.basis)
    }

    /// Exact membership test: is `v` a linear combination of the basis?
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        // rank does not grow when v lies in the span
        let mut cols = self.basis.clone();
        cols.push(v.to_vec());
        basis_matrix(self.ambient_dim, &cols).rank() == self.basis.len()
    }

    /// Exact span equality.
    pub fn spans_same(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

fn basis_matrix(ambient_dim: usize, basis: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(ambient_dim, basis.len(), |r, c| basis[c][r].clone())
}

/// The omega-orthogonal complement
/// `W^perp = { v : w(v, x) = 0 for all x in W }`.
pub fn omega_complement(w: &TwoForm, sub: &Subspace) -> Result<Subspace> {
    if sub.ambient_dim() != w.dim() {
        return Err(Error::ShapeMismatch(format!(
            "subspace lives in dimension {}, form in {}",
            sub.ambient_dim(),
            w.dim()
        )));
    }
    if sub.dim() == 0 {
        // everything pairs to zero against the empty set
        let full: Vec<Vec<Scalar>> = (0..w.dim())
            .map(|i| {
                let mut v = vec![Scalar::zero(); w.dim()];
                v[i] = Scalar::one();
                v
            })
            .collect();
        return Subspace::new(w.dim(), full);
    }
    // w(v, x_j) = v^T O x_j; stack the rows (O x_j)^T and take the kernel
    let constraints = &sub.basis_matrix().transpose() * &w.matrix().transpose();
    Subspace::new(w.dim(), constraints.kernel_basis())
}

/// The four predicate flags evaluated on a subspace at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceFlags {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub is_isotropic: bool,
    pub is_lagrangian: bool,
}

/// Evaluates subalgebra / ideal (with respect to `g`) and isotropic /
/// Lagrangian (with respect to `w`) for `sub`, all exactly.
pub fn predicates(g: &LieAlgebra, w: &TwoForm, sub: &Subspace) -> Result<SubspaceFlags> {
    if sub.ambient_dim() != g.dim() || w.dim() != g.dim() {
        return Err(Error::ShapeMismatch(
            "algebra, form and subspace dimensions must agree".into(),
        ));
    }
    let dim = g.dim();

    // isotropic: the form restricted to the subspace vanishes
    let bm = sub.basis_matrix();
    let restricted = &(&bm.transpose() * w.matrix()) * &bm;
    let is_isotropic = restricted.is_zero();

    let complement = omega_complement(w, sub)?;
    let is_lagrangian = sub.dim() == complement.dim() && complement.spans_same(sub);

    let mut is_subalgebra = true;
    for i in 0..sub.dim() {
        for j in i + 1..sub.dim() {
            let br = g.bracket(&sub.basis()[i], &sub.basis()[j])?;
            if !sub.contains(&br) {
                is_subalgebra = false;
            }
        }
    }

    let mut is_ideal = true;
    for a in 0..dim {
        let mut ea = vec![Scalar::zero(); dim];
        ea[a] = Scalar::one();
        for v in sub.basis() {
            let br = g.bracket(&ea, v)?;
            if !sub.contains(&br) {
                is_ideal = false;
            }
        }
    }

    Ok(SubspaceFlags {
        is_subalgebra,
        is_ideal,
        is_isotropic,
        is_lagrangian,
    })
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    dim: usize,
    basis: Vec<Vec<String>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            dim: self.ambient_dim,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(format_scalar).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SubspaceRepr::deserialize(d)?;
        let mut basis = Vec::with_capacity(repr.basis.len());
        for v in &repr.basis {
            let mut vec = Vec::with_capacity(v.len());
            for s in v {
                vec.push(parse_scalar(s).map_err(D::Error::custom)?);
            }
            basis.push(vec);
        }
        Subspace::new(repr.dim, basis).map_err(D::Error::custom)
    }
}
