//! Dense matrices over exact rationals.
//!
//! Everything here is exact: rank, inverse and kernel come from rational
//! Gaussian elimination with deterministic pivoting (first nonzero entry,
//! scanning top to bottom), and `lpu_decompose` produces triangular factors
//! `L`, `U` with `L·D·U` equal to a permutation matrix, entry-exact.
//! Instance sizes are small, so coefficient growth is accepted.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, int, parse_scalar, Scalar};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries; their count must be `rows·cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self { rows, cols, entries }
    }

    /// Convenience constructor from integer rows, mostly for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| int(rows[i][j]))
    }

    /// Column vector from a slice.
    pub fn column(v: &[Scalar]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at `(r, c)`, zero-based.
    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    /// Copy of row `r` as a vector.
    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    /// Copy of column `c` as a vector.
    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * k)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot apply {}x{} matrix to length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.at(r, c) * &v[c])
                    .fold(Scalar::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    /// Copy of the `rows x cols` submatrix anchored at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        Matrix::from_fn(rows, cols, |r, c| self.at(r0 + r, c0 + c).clone())
    }

    /// Overwrites the submatrix anchored at `(r0, c0)` with `m`.
    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        assert!(r0 + m.rows <= self.rows && c0 + m.cols <= self.cols, "block out of range");
        for r in 0..m.rows {
            for c in 0..m.cols {
                self.set(r0 + r, c0 + c, m.at(r, c).clone());
            }
        }
    }

    /// `2x2` block matrix `(a, b; c, d)`; shapes must be consistent.
    pub fn block2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut m = Matrix::zeros(a.rows + c.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols, b);
        m.set_block(a.rows, 0, c);
        m.set_block(a.rows, a.cols, d);
        m
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Matrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square(), "block-diagonal blocks must be square");
            m.set_block(off, off, b);
            off += b.rows;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..=r).all(|c| *self.at(r, c) == -self.at(c, r))
            })
    }

    /// Exactly one `1` in every row and column, zeros elsewhere.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let mut seen_col = vec![false; n];
        for r in 0..n {
            let mut hit = None;
            for c in 0..n {
                let v = self.at(r, c);
                if v.is_zero() {
                    continue;
                }
                if !v.is_one() || hit.is_some() {
                    return false;
                }
                hit = Some(c);
            }
            match hit {
                Some(c) if !seen_col[c] => seen_col[c] = true,
                _ => return false,
            }
        }
        true
    }

    /// `t[i][j] = 0` for `i <= j`.
    pub fn is_strictly_lower_triangular(&self) -> bool {
        (0..self.rows).all(|r| (r..self.cols).all(|c| self.at(r, c).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.at(r, c).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.at(r, c).is_zero()))
    }

    /// Reduced row echelon form.
    ///
    /// Returns `(rref, transform, pivot_cols)` with `transform · self = rref`;
    /// pivoting always takes the first nonzero entry scanning top to bottom,
    /// so the output is deterministic.
    pub fn rref(&self) -> (Matrix, Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut e = Matrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !a.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                a.swap_rows(p, row);
                e.swap_rows(p, row);
            }
            let inv = a.at(row, col).recip();
            a.scale_row(row, &inv);
            e.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !a.at(r, col).is_zero() {
                    let f = a.at(r, col).clone();
                    a.sub_scaled_row(r, row, &f);
                    e.sub_scaled_row(r, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, e, pivots)
    }

    /// Exact rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.rref().2.len()
    }

    /// Exact inverse; `Err(SingularMatrix)` when the determinant vanishes.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let (r, e, pivots) = self.rref();
        if pivots.len() != self.rows {
            return Err(Error::SingularMatrix);
        }
        debug_assert!(r.is_identity());
        Ok(e)
    }

    /// Exact determinant via fraction-free-style forward elimination.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a.at(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if !a.at(r, col).is_zero() {
                    let f = a.at(r, col) / &pivot;
                    a.sub_scaled_row(r, col, &f);
                }
            }
        }
        det
    }

    /// Basis of the right kernel `{v : Mv = 0}` as column vectors.
    ///
    /// The vectors are independent and their count is `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, _, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[fc] = Scalar::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.at(i, fc);
                }
                v
            })
            .collect()
    }

    /// LPU decomposition: triangular `L`, `U` with `L·D·U` a permutation matrix.
    ///
    /// Row operations only ever add a multiple of a row to a lower row and
    /// column operations add a multiple of a column to a later column, so no
    /// row permutation is performed; the permutation is determined by the
    /// rank profile of the leading submatrices.
    pub fn lpu_decompose(&self) -> Result<Lpu> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "LPU needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut e = self.clone();
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        // pivot_row_of[j] = assigned pivot row of column j, filled left to right
        let mut pivot_row_of: Vec<usize> = Vec::with_capacity(n);
        let mut assigned = vec![false; n];
        for col in 0..n {
            // clear entries of this column sitting in already-assigned rows,
            // using earlier columns (each has a single nonzero entry left)
            for (k, &pr) in pivot_row_of.iter().enumerate() {
                if !e.at(pr, col).is_zero() {
                    let f = e.at(pr, col) / e.at(pr, k);
                    e.sub_scaled_col(col, k, &f);
                    u.sub_scaled_col(col, k, &f);
                }
            }
            let Some(pivot) = (0..n).find(|&r| !assigned[r] && !e.at(r, col).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            // clear below the pivot with row operations (strictly lower in L)
            for r in pivot + 1..n {
                if !e.at(r, col).is_zero() {
                    let f = e.at(r, col) / e.at(pivot, col);
                    e.sub_scaled_row(r, pivot, &f);
                    l.sub_scaled_row(r, pivot, &f);
                }
            }
            // normalize: the column now has a single nonzero entry
            let inv = e.at(pivot, col).recip();
            e.scale_col(col, &inv);
            u.scale_col(col, &inv);
            assigned[pivot] = true;
            pivot_row_of.push(pivot);
        }
        debug_assert!(e.is_permutation());
        debug_assert!(l.is_lower_triangular());
        debug_assert!(u.is_upper_triangular());
        Ok(Lpu { l, u, p: e })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) * k;
            self.set(r, c, v);
        }
    }

    /// `row[r] -= k * row[src]`
    pub(crate) fn sub_scaled_row(&mut self, r: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c) - &(self.at(src, c) * k);
            self.set(r, c, v);
        }
    }

    fn scale_col(&mut self, c: usize, k: &Scalar) {
        for r in 0..self.rows {
            let v = self.at(r, c) * k;
            self.set(r, c, v);
        }
    }

    /// `col[c] -= k * col[src]`
    fn sub_scaled_col(&mut self, c: usize, src: usize, k: &Scalar) {
        for r in 0..self.rows {
            let v = self.at(r, c) - &(self.at(r, src) * k);
            self.set(r, c, v);
        }
    }
}

/// Result of [`Matrix::lpu_decompose`]: `l · input · u = p`.
#[derive(Clone, Debug)]
pub struct Lpu {
    /// Lower triangular factor applied on the left.
    pub l: Matrix,
    /// Upper triangular factor applied on the right.
    pub u: Matrix,
    /// The resulting permutation matrix.
    pub p: Matrix,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format_scalar(self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols)
                .map(|k| self.at(r, k) * rhs.at(k, c))
                .fold(Scalar::zero(), |acc, x| acc + x)
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sum shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + rhs.at(r, c))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "difference shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - rhs.at(r, c))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self.at(r, c))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| format_scalar(self.at(r, c))).collect())
            .collect();
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom(format!(
                "expected {} rows, got {}",
                repr.rows,
                repr.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(repr.rows * repr.cols);
        for row in &repr.entries {
            if row.len() != repr.cols {
                return Err(D::Error::custom(format!(
                    "expected {} columns, got {}",
                    repr.cols,
                    row.len()
                )));
            }
            for s in row {
                entries.push(parse_scalar(s).map_err(D::Error::custom)?);
            }
        }
        Ok(Matrix {
            rows: repr.rows,
            cols: repr.cols,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Matrix::identity(3).inverse().unwrap(), Matrix::identity(3));

        let d = Matrix::from_i64(&[&[2, 0], &[0, 4]]);
        let inv = d.inverse().unwrap();
        assert_eq!(*inv.at(0, 0), ratio(1, 2));
        assert_eq!(*inv.at(1, 1), ratio(1, 4));

        let u = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let ui = u.inverse().unwrap();
        assert_eq!(ui, Matrix::from_i64(&[&[1, -1], &[0, 1]]));
        assert!((&u * &ui).is_identity());
    }

    #[test]
    fn inverse_singular() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0], -k[0][1].clone());
        assert!(!k[0][0].is_zero());

        assert!(Matrix::identity(2).kernel_basis().is_empty());

        let k = Matrix::zeros(2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
        let m = Matrix::from_fn(2, 2, |r, c| k[c][r].clone());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ks = m.kernel_basis();
        assert_eq!(ks.len(), 3 - m.rank());
        for v in &ks {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn lpu_identity_and_permutation() {
        let lpu = Matrix::identity(3).lpu_decompose().unwrap();
        assert!(lpu.l.is_identity() && lpu.u.is_identity() && lpu.p.is_identity());

        let p = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let lpu = p.lpu_decompose().unwrap();
        assert!(lpu.l.is_identity() && lpu.u.is_identity());
        assert_eq!(lpu.p, p);
    }

    #[test]
    fn lpu_pinned_example() {
        let d = Matrix::from_i64(&[&[1, 1], &[1, 0]]);
        let lpu = d.lpu_decompose().unwrap();
        assert!(lpu.l.is_lower_triangular());
        assert!(lpu.u.is_upper_triangular());
        assert!(lpu.p.is_permutation());
        assert_eq!(&(&lpu.l * &d) * &lpu.u, lpu.p);
        // leading 1x1 block of D is nonsingular, so the permutation is I
        assert!(lpu.p.is_identity());
    }

    #[test]
    fn lpu_rejects_singular() {
        let d = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(matches!(d.lpu_decompose(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn det_matches_elimination() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, -1, 3], &[0, 4, 1]]);
        assert_eq!(m.det(), int(-27));
        assert_eq!(Matrix::zeros(2, 2).det(), int(0));
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_fn(2, 3, |r, c| ratio(r as i64 * 3 + c as i64 + 1, 2));
        let s = serde_json::to_string(&m).unwrap();
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(s.contains("\"rows\":2"));
        assert!(s.contains("1/2"));
    }

    #[test]
    fn json_rejects_bad_shape() {
        let bad = r#"{"rows":2,"cols":2,"entries":[["1","0"]]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
        let bad = r#"{"rows":1,"cols":1,"entries":[["1.5"]]}"#;
        assert!(serde_json::from_str::<Matrix>(bad).is_err());
    }
}
