//! Lie algebras as sparse structure-constant tables.
//!
//! A table stores the coefficients `c_{ij}^k` of `[e_i, e_j] = sum_k c_{ij}^k e_k`
//! for `i < j` only; antisymmetry fills in the rest. Two families are built in:
//!
//! - `RH`: dimension `2n`, relations `[e_1, e_k] = e_k` for `k = 2..2n`
//!   (the Lie algebra of real hyperbolic space),
//! - `HEIS`: dimension `2n`, single relation `[e_1, e_2] = e_{2n}`
//!   (3-dimensional Heisenberg plus an abelian factor, `n >= 2`).
//!
//! Both have parabolic scaled automorphism groups with an explicit zero
//! pattern, checked by [`LieAlgebra::in_scaled_aut`].

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// Which bracket table an algebra carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Real hyperbolic family, `[e_1, e_k] = e_k`.
    Rh,
    /// Heisenberg-plus-abelian family, `[e_1, e_2] = e_{2n}`.
    Heis,
    /// Anything else supplied by the user.
    Generic,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Rh => "RH",
            Family::Heis => "HEIS",
            Family::Generic => "GENERIC",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "RH" => Ok(Family::Rh),
            "HEIS" => Ok(Family::Heis),
            "GENERIC" => Ok(Family::Generic),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Family::parse(&s).map_err(D::Error::custom)
    }
}

/// A Lie algebra of even dimension `2n` given by structure constants.
///
/// The table is sparse: a list of `(i, j, k, c)` with `i < j` (zero-based),
/// meaning `[e_i, e_j]` has coefficient `c` on `e_k`. Whether the table
/// satisfies the Jacobi identity is checked by [`LieAlgebra::check_jacobi`],
/// not enforced at construction, so violating tables can be built and
/// rejected by callers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    family: Family,
    /// sorted by (i, j, k), all indices zero-based, i < j
    table: Vec<(usize, usize, usize, Scalar)>,
}

impl LieAlgebra {
    /// Builds an algebra from a sparse table with zero-based indices.
    pub fn new(dim: usize, family: Family, mut table: Vec<(usize, usize, usize, Scalar)>) -> Result<Self> {
        if dim == 0 || !dim.is_multiple_of(2) {
            return Err(Error::InvalidDimension(format!(
                "dimension must be a positive even number, got {dim}"
            )));
        }
        table.retain(|(_, _, _, c)| !c.is_zero());
        table.sort_by_key(|&(i, j, k, _)| (i, j, k));
        for w in table.windows(2) {
            if (w[0].0, w[0].1, w[0].2) == (w[1].0, w[1].1, w[1].2) {
                return Err(Error::Parse(format!(
                    "duplicate structure constant for ({}, {}, {})",
                    w[0].0 + 1,
                    w[0].1 + 1,
                    w[0].2 + 1
                )));
            }
        }
        for &(i, j, k, _) in &table {
            if i >= j {
                return Err(Error::Parse(format!(
                    "structure constants must have i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if j >= dim || k >= dim {
                return Err(Error::ShapeMismatch(format!(
                    "structure constant index out of range for dimension {dim}"
                )));
            }
        }
        Ok(Self { dim, family, table })
    }

    /// The abelian algebra of dimension `dim` (empty table).
    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, Family::Generic, Vec::new()).expect("abelian table is valid")
    }

    /// Builds one of the two named families at half-dimension `n`.
    pub fn family(tag: Family, n: usize) -> Result<Self> {
        match tag {
            Family::Rh => {
                if n < 1 {
                    return Err(Error::InvalidDimension("RH needs n >= 1".into()));
                }
                let dim = 2 * n;
                let table = (1..dim).map(|k| (0, k, k, Scalar::one())).collect();
                Self::new(dim, Family::Rh, table)
            }
            Family::Heis => {
                if n < 2 {
                    return Err(Error::InvalidDimension(
                        "HEIS needs n >= 2 (the abelian factor has dimension 2n-3)".into(),
                    ));
                }
                let dim = 2 * n;
                Self::new(dim, Family::Heis, vec![(0, 1, dim - 1, Scalar::one())])
            }
            Family::Generic => Err(Error::UnsupportedFamily),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn family_tag(&self) -> Family {
        self.family
    }

    pub fn table(&self) -> &[(usize, usize, usize, Scalar)] {
        &self.table
    }

    /// `[e_i, e_j]` on basis vectors, any order of indices (zero-based).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        if i == j {
            return out;
        }
        for &(p, q, k, ref c) in &self.table {
            if (p, q) == (a, b) {
                out[k] = if sign > 0 { c.clone() } else { -c };
            }
        }
        out
    }

    /// Bilinear extension of the structure table: `[x, y]`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "bracket needs two vectors of length {}, got {} and {}",
                self.dim,
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for &(i, j, k, ref c) in &self.table {
            // c * (x_i y_j - x_j y_i) on e_k
            let coeff = c * &(&x[i] * &y[j] - &x[j] * &y[i]);
            if !coeff.is_zero() {
                out[k] = &out[k] + &coeff;
            }
        }
        Ok(out)
    }

    /// Checks `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` over all basis triples.
    pub fn check_jacobi(&self) -> bool {
        let basis: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| {
                let mut v = vec![Scalar::zero(); self.dim];
                v[i] = Scalar::one();
                v
            })
            .collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self
                        .bracket(&self.bracket_basis(i, j), &basis[k])
                        .expect("basis vector length");
                    let b = self
                        .bracket(&self.bracket_basis(j, k), &basis[i])
                        .expect("basis vector length");
                    let c = self
                        .bracket(&self.bracket_basis(k, i), &basis[j])
                        .expect("basis vector length");
                    for idx in 0..self.dim {
                        if !(&(&a[idx] + &b[idx]) + &c[idx]).is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff `phi` is invertible and `phi [x, y] = [phi x, phi y]` on all
    /// basis pairs.
    pub fn is_automorphism(&self, phi: &Matrix) -> Result<bool> {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "automorphism candidate must be {0}x{0}",
                self.dim
            )));
        }
        if phi.rank() != self.dim {
            return Err(Error::SingularMatrix);
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = phi.mul_vec(&self.bracket_basis(i, j))?;
                let rhs = self.bracket(&phi.col_vec(i), &phi.col_vec(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Membership test for the scaled automorphism group of the two named
    /// families, by their block-triangular zero pattern plus nonsingularity.
    ///
    /// `RH`: first row is `(*, 0, ..., 0)` — block sizes `(1, 2n-1)`.
    /// `HEIS`: block sizes `(2, 2n-3, 1)`; rows 1-2 vanish outside columns
    /// 1-2, and the last column vanishes above the last row.
    pub fn in_scaled_aut(&self, m: &Matrix) -> Result<bool> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "pattern candidate must be {0}x{0}",
                self.dim
            )));
        }
        let d = self.dim;
        let pattern_ok = match self.family {
            Family::Rh => (1..d).all(|c| m.at(0, c).is_zero()),
            Family::Heis => {
                let top = (0..2).all(|r| (2..d).all(|c| m.at(r, c).is_zero()));
                // rows 3..=2n-1 must vanish in the last column
                let mid = (2..d - 1).all(|r| m.at(r, d - 1).is_zero());
                top && mid
            }
            Family::Generic => return Err(Error::UnsupportedFamily),
        };
        Ok(pattern_ok && m.rank() == d)
    }
}

#[derive(Serialize, Deserialize)]
struct LieAlgebraRepr {
    dim: usize,
    family: Family,
    brackets: Vec<(usize, usize, usize, String)>,
}

impl Serialize for LieAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LieAlgebraRepr {
            dim: self.dim,
            family: self.family,
            brackets: self
                .table
                .iter()
                .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, format_scalar(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = LieAlgebraRepr::deserialize(d)?;
        let mut table = Vec::with_capacity(repr.brackets.len());
        for (i, j, k, c) in &repr.brackets {
            if *i == 0 || *j == 0 || *k == 0 {
                return Err(D::Error::custom("bracket indices are 1-based"));
            }
            table.push((i - 1, j - 1, k - 1, parse_scalar(c).map_err(D::Error::custom)?));
        }
        LieAlgebra::new(repr.dim, repr.family, table).map_err(D::Error::custom)
    }
}
