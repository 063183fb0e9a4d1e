//! Skew 2-forms, the pullback action and the cocycle (closedness) condition.
//!
//! A form is stored as its skew Gram matrix `O` under the convention
//! `w(x, y) = x^T O y`. Degenerate matrices are allowed so that the cocycle
//! space `Z^2` is a genuine vector space; nondegeneracy is a predicate
//! applied at classification time.
//!
//! Closedness of `w` on a Lie algebra `g` means
//! `dw(x, y, z) = w(x,[y,z]) + w(z,[x,y]) + w(y,[z,x]) = 0` for all triples.

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};

/// A skew-symmetric bilinear form on `Q^{2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    matrix: Matrix,
}

impl TwoForm {
    /// Wraps a skew-symmetric matrix of even size.
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) || matrix.rows() == 0 {
            return Err(Error::ShapeMismatch(format!(
                "a 2-form needs a square matrix of positive even size, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(Self { matrix })
    }

    /// The canonical form `w0` with Gram matrix `J = (0, I_n; -I_n, 0)`.
    pub fn canonical(n: usize) -> Self {
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, Scalar::one());
            m.set(n + i, i, -Scalar::one());
        }
        Self { matrix: m }
    }

    /// Builds a form from its strictly-upper entries `(i, j, c)` with
    /// `i < j`, zero-based; the lower triangle is implied by skewness.
    pub fn from_upper_entries(dim: usize, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut m = Matrix::zeros(dim, dim);
        for (i, j, c) in entries {
            if *i >= *j {
                return Err(Error::Parse(format!(
                    "form entries must have i < j, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if *j >= dim {
                return Err(Error::ShapeMismatch(format!(
                    "form entry index out of range for dimension {dim}"
                )));
            }
            if !m.at(*i, *j).is_zero() {
                return Err(Error::Parse(format!("duplicate form entry ({}, {})", i + 1, j + 1)));
            }
            m.set(*i, *j, c.clone());
            m.set(*j, *i, -c);
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `w(x, y) = x^T O y`.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let oy = self.matrix.mul_vec(y)?;
        if x.len() != oy.len() {
            return Err(Error::ShapeMismatch("form arguments have wrong length".into()));
        }
        Ok(x.iter()
            .zip(&oy)
            .map(|(a, b)| a * b)
            .fold(Scalar::zero(), |acc, v| acc + v))
    }

    /// True iff the top power does not vanish, i.e. `det(O) != 0`.
    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.matrix.rows()
    }

    /// Pullback action `g.w(x, y) = w(g^{-1} x, g^{-1} y)`, whose Gram
    /// matrix is `(g^{-1})^T O g^{-1}`.
    pub fn pullback(&self, g: &Matrix) -> Result<TwoForm> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "pullback needs a {0}x{0} matrix",
                self.dim()
            )));
        }
        let gi = g.inverse()?;
        TwoForm::new(&(&gi.transpose() * &self.matrix) * &gi)
    }

    /// Scales the form by `k`.
    pub fn scaled(&self, k: &Scalar) -> TwoForm {
        TwoForm {
            matrix: self.matrix.scale(k),
        }
    }
}

/// The alternating sum `w(x,[y,z]) + w(z,[x,y]) + w(y,[z,x])`.
pub fn d_omega(
    g: &LieAlgebra,
    w: &TwoForm,
    x: &[Scalar],
    y: &[Scalar],
    z: &[Scalar],
) -> Result<Scalar> {
    if w.dim() != g.dim() {
        return Err(Error::ShapeMismatch(format!(
            "form dimension {} does not match algebra dimension {}",
            w.dim(),
            g.dim()
        )));
    }
    let a = w.evaluate(x, &g.bracket(y, z)?)?;
    let b = w.evaluate(z, &g.bracket(x, y)?)?;
    let c = w.evaluate(y, &g.bracket(z, x)?)?;
    Ok(&(&a + &b) + &c)
}

/// True iff `d_omega` vanishes on all basis triples `i < j < k`.
pub fn is_closed(g: &LieAlgebra, w: &TwoForm) -> Result<bool> {
    if w.dim() != g.dim() {
        return Err(Error::ShapeMismatch(format!(
            "form dimension {} does not match algebra dimension {}",
            w.dim(),
            g.dim()
        )));
    }
    let dim = g.dim();
    let basis: Vec<Vec<Scalar>> = (0..dim).map(|i| basis_vector(dim, i)).collect();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                if !d_omega(g, w, &basis[i], &basis[j], &basis[k])?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Strictly-upper coordinate pairs `(i, j)`, `i < j`, in lexicographic order.
/// This ordering indexes skew matrices both for the `d` coefficient matrix
/// and for serialization.
pub fn skew_pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(dim * (dim - 1) / 2);
    for i in 0..dim {
        for j in i + 1..dim {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Basis of the space `Z^2(g)` of closed skew forms.
///
/// Assembles the linear map `w -> dw` from skew coordinates (dimension
/// `n(2n-1)`) to values on basis triples, and returns kernel vectors as
/// forms. Every returned form is closed and every closed form is in their
/// span, exactly.
pub fn cocycle_space(g: &LieAlgebra) -> Vec<TwoForm> {
    let dim = g.dim();
    let pairs = skew_pairs(dim);
    let col_of = |i: usize, j: usize| -> usize {
        // lexicographic index of (i, j), i < j
        debug_assert!(i < j);
        i * dim - i * (i + 1) / 2 + (j - i - 1)
    };
    let mut triples = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                triples.push((i, j, k));
            }
        }
    }
    let mut coeff = Matrix::zeros(triples.len(), pairs.len());
    for (row, &(i, j, k)) in triples.iter().enumerate() {
        // dw(e_i, e_j, e_k) = w(e_i, [e_j, e_k]) + w(e_k, [e_i, e_j]) + w(e_j, [e_k, e_i])
        let mut add_term = |a: usize, bracket: Vec<Scalar>, sign_flip: bool| {
            for (m, c) in bracket.into_iter().enumerate() {
                if c.is_zero() || m == a {
                    continue;
                }
                let c = if sign_flip { -c } else { c };
                // w(e_a, e_m) = +w_{am} if a < m, else -w_{ma}
                let (col, signed) = if a < m {
                    (col_of(a, m), c)
                } else {
                    (col_of(m, a), -c)
                };
                let v = coeff.at(row, col) + &signed;
                coeff.set(row, col, v);
            }
        };
        add_term(i, g.bracket_basis(j, k), false);
        add_term(k, g.bracket_basis(i, j), false);
        // w(e_j, [e_k, e_i]) = -w(e_j, [e_i, e_k])
        add_term(j, g.bracket_basis(i, k), true);
    }
    coeff
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let entries: Vec<(usize, usize, Scalar)> = pairs
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(&(i, j), c)| (i, j, c))
                .collect();
            TwoForm::from_upper_entries(dim, &entries).expect("kernel vector encodes a skew form")
        })
        .collect()
}

fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

#[derive(Serialize, Deserialize)]
struct TwoFormRepr {
    dim: usize,
    entries: Vec<(usize, usize, String)>,
}

impl Serialize for TwoForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = skew_pairs(self.dim())
            .into_iter()
            .filter(|&(i, j)| !self.matrix.at(i, j).is_zero())
            .map(|(i, j)| (i + 1, j + 1, format_scalar(self.matrix.at(i, j))))
            .collect();
        TwoFormRepr {
            dim: self.dim(),
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TwoFormRepr::deserialize(d)?;
        let mut entries = Vec::with_capacity(repr.entries.len());
        for (i, j, c) in &repr.entries {
            if *i == 0 || *j == 0 {
                return Err(D::Error::custom("form entry indices are 1-based"));
            }
            entries.push((i - 1, j - 1, parse_scalar(c).map_err(D::Error::custom)?));
        }
        TwoForm::from_upper_entries(repr.dim, &entries).map_err(D::Error::custom)
    }
}
