//! The symplectic group toolkit.
//!
//! Fix `J = (0, I_n; -I_n, 0)`. A matrix `A` is symplectic when
//! `A^T J A = J`, exactly. This module provides:
//!
//! - membership testing and the three block generator types
//!   (`(I, C; 0, I)` / `(I, 0; C, I)` with symmetric `C`,
//!   `(A, 0; 0, (A^T)^{-1})`, and `(P, 0; 0, P)` for permutations),
//! - the rank-boosting construction of a symplectic `S` making the
//!   left-upper `n x n` corner of `M·S` nonsingular,
//! - the symplectic QR decomposition: `M·S = (I_n, T; *, *)` with `T`
//!   strictly lower triangular,
//! - the permutation splitting `K_2 · P · K_1^T ∈ {I_n, full cycle}` with
//!   block-diagonal permutation factors of shapes `(2, n-2)` and `(n-1, 1)`,
//! - Darboux bases: `B` with `B^T O B = J` for any nondegenerate skew `O`.
//!
//! All outputs are deterministic; pivot scans always take the first nonzero
//! entry.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::TwoForm;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Fixed half-dimension `n` together with the canonical structures on
/// `Q^{2n}`.
#[derive(Debug, Clone)]
pub struct SymplecticContext {
    n: usize,
    j: Matrix,
}

impl SymplecticContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension("half-dimension must be positive".into()));
        }
        Ok(Self {
            n,
            j: TwoForm::canonical(n).matrix().clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The matrix `J = (0, I_n; -I_n, 0)`.
    pub fn j(&self) -> &Matrix {
        &self.j
    }

    /// The canonical form `w0`, whose Gram matrix is `J`.
    pub fn omega0(&self) -> TwoForm {
        TwoForm::canonical(self.n)
    }

    /// True iff `a^T J a = J` exactly.
    pub fn is_symplectic(&self, a: &Matrix) -> Result<bool> {
        if a.rows() != self.dim() || a.cols() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "symplectic candidate must be {0}x{0}",
                self.dim()
            )));
        }
        Ok(&(&a.transpose() * &self.j) * a == self.j)
    }

    /// Builds one of the block generators; the output always passes
    /// [`SymplecticContext::is_symplectic`].
    pub fn build_generator(&self, kind: GeneratorKind, payload: &Matrix) -> Result<Matrix> {
        let n = self.n;
        if payload.rows() != n || payload.cols() != n {
            return Err(Error::ShapeMismatch(format!("generator payload must be {n}x{n}")));
        }
        let id = Matrix::identity(n);
        let zero = Matrix::zeros(n, n);
        match kind {
            GeneratorKind::Type1Upper | GeneratorKind::Type1Lower => {
                if !payload.is_symmetric() {
                    return Err(Error::NotSymmetric);
                }
                Ok(match kind {
                    GeneratorKind::Type1Upper => Matrix::block2x2(&id, payload, &zero, &id),
                    _ => Matrix::block2x2(&id, &zero, payload, &id),
                })
            }
            GeneratorKind::Type2 => {
                let inv_t = payload.inverse()?.transpose();
                Ok(Matrix::block2x2(payload, &zero, &zero, &inv_t))
            }
            GeneratorKind::Type3 => {
                if !payload.is_permutation() {
                    return Err(Error::NotPermutation);
                }
                Ok(Matrix::block2x2(payload, &zero, &zero, payload))
            }
        }
    }

    /// Finds a symplectic `S` such that the left-upper `n x n` block of
    /// `M·S` is nonsingular.
    ///
    /// Each pass conjugates the corner to `(I_r, 0; 0, 0)`, shears a nonzero
    /// entry into the trailing block if needed, and adds it back with a
    /// Type-1 factor; the corner rank strictly increases, so at most `n`
    /// passes run.
    pub fn nonsingular_corner(&self, m: &Matrix) -> Result<Matrix> {
        let n = self.n;
        let d = self.dim();
        if m.rows() != d || m.cols() != d {
            return Err(Error::ShapeMismatch(format!("input must be {d}x{d}")));
        }
        if m.rank() != d {
            return Err(Error::SingularMatrix);
        }
        let mut s_acc = Matrix::identity(d);
        let mut last_rank = None;
        loop {
            let current = m * &s_acc;
            let corner = current.block(0, 0, n, n);
            let r = corner.rank();
            if let Some(prev) = last_rank {
                debug_assert!(r > prev, "corner rank must strictly increase");
            }
            if r == n {
                return Ok(s_acc);
            }
            last_rank = Some(r);

            let (g1, g2) = full_rank_factor(&corner, r);
            let k = Matrix::block_diag(&[&g1, &Matrix::identity(n)]);
            let s1 = self.build_generator(GeneratorKind::Type2, &g2)?;
            let mut m1 = &(&k * &current) * &s1;
            let mut pass = s1;

            let beta = m1.block(r, n + r, n - r, n - r);
            if beta.is_zero() {
                let alpha = m1.block(r, n, n - r, r);
                // first column of alpha holding a nonzero entry
                let col = (0..r)
                    .find(|&c| (0..n - r).any(|rr| !alpha.at(rr, c).is_zero()))
                    .expect("alpha must be nonzero when beta vanishes");
                let mut gamma = Matrix::zeros(r, n - r);
                gamma.set(col, 0, Scalar::one());
                let a2 = Matrix::block2x2(
                    &Matrix::identity(r),
                    &Matrix::zeros(r, n - r),
                    &-&gamma.transpose(),
                    &Matrix::identity(n - r),
                );
                let s2 = self.build_generator(GeneratorKind::Type2, &a2)?;
                m1 = &m1 * &s2;
                pass = &pass * &s2;
            }

            let mut c3 = Matrix::zeros(n, n);
            c3.set_block(r, r, &Matrix::identity(n - r));
            let s3 = self.build_generator(GeneratorKind::Type1Lower, &c3)?;
            pass = &pass * &s3;
            s_acc = &s_acc * &pass;
        }
    }

    /// Symplectic QR decomposition of a nonsingular `M`: a symplectic `S`
    /// with `M·S = (I_n, T; *, *)` and `T` strictly lower triangular.
    pub fn symplectic_qr(&self, m: &Matrix) -> Result<SymplecticQr> {
        let n = self.n;
        let s1 = self.nonsingular_corner(m)?;
        let m1 = m * &s1;
        let corner = m1.block(0, 0, n, n);
        let s2 = self.build_generator(GeneratorKind::Type2, &corner.inverse()?)?;
        let m2 = &m1 * &s2;
        let b = m2.block(0, n, n, n);
        let c = symmetric_complement(&b);
        let s3 = self.build_generator(GeneratorKind::Type1Upper, &c)?;
        let product = &m2 * &s3;
        let s = &(&s1 * &s2) * &s3;

        let t = product.block(0, n, n, n);
        let qr = SymplecticQr { s, t, product };
        self.verify_qr(m, &qr)?;
        Ok(qr)
    }

    fn verify_qr(&self, m: &Matrix, qr: &SymplecticQr) -> Result<()> {
        let n = self.n;
        if !self.is_symplectic(&qr.s)? {
            return Err(Error::Verification("QR factor S is not symplectic".into()));
        }
        if m * &qr.s != qr.product {
            return Err(Error::Verification("QR product does not equal M·S".into()));
        }
        if !qr.product.block(0, 0, n, n).is_identity() {
            return Err(Error::Verification("QR corner is not the identity".into()));
        }
        if !qr.t.is_strictly_lower_triangular() {
            return Err(Error::Verification("QR block T is not strictly lower triangular".into()));
        }
        if qr.product.block(0, n, n, n) != qr.t {
            return Err(Error::Verification("QR block T does not match the product".into()));
        }
        Ok(())
    }

    /// Darboux basis of a nondegenerate form: a matrix `B` whose columns
    /// form a symplectic basis, `B^T O B = J`.
    ///
    /// Greedy pairing: take the first unprocessed vector, pair it with the
    /// first vector of nonzero pairing, normalize the partner, project the
    /// rest into the symplectic complement of the pair.
    pub fn darboux_basis(&self, omega: &TwoForm) -> Result<Matrix> {
        let d = self.dim();
        if omega.dim() != d {
            return Err(Error::ShapeMismatch(format!("form must live on Q^{d}")));
        }
        let o = omega.matrix();
        let pairing = |x: &[Scalar], y: &[Scalar]| -> Scalar {
            let oy = o.mul_vec(y).expect("dimension checked");
            x.iter()
                .zip(&oy)
                .map(|(a, b)| a * b)
                .fold(Scalar::zero(), |acc, v| acc + v)
        };
        let mut remaining: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut v = vec![Scalar::zero(); d];
                v[i] = Scalar::one();
                v
            })
            .collect();
        let mut us: Vec<Vec<Scalar>> = Vec::with_capacity(self.n);
        let mut vs: Vec<Vec<Scalar>> = Vec::with_capacity(self.n);
        while !remaining.is_empty() {
            let u = remaining.remove(0);
            let partner = (0..remaining.len()).find(|&i| !pairing(&u, &remaining[i]).is_zero());
            let Some(pi) = partner else {
                // u pairs to zero with everything left and with all finished
                // pairs, so it lies in the kernel of the form
                return Err(Error::DegenerateForm);
            };
            let v = remaining.remove(pi);
            let c = pairing(&u, &v);
            let v: Vec<Scalar> = v.iter().map(|x| x / &c).collect();
            for w in remaining.iter_mut() {
                let a = pairing(&v, w); // coefficient on u, with sign flip
                let b = pairing(&u, w);
                for idx in 0..d {
                    w[idx] = &w[idx] + &(&a * &u[idx]) - (&b * &v[idx]);
                }
            }
            us.push(u);
            vs.push(v);
        }
        let mut b = Matrix::zeros(d, d);
        for (col, vec) in us.iter().chain(vs.iter()).enumerate() {
            for (row, val) in vec.iter().enumerate() {
                b.set(row, col, val.clone());
            }
        }
        debug_assert_eq!(&(&b.transpose() * o) * &b, self.j);
        Ok(b)
    }
}

/// The four symplectic block generator shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `(I, C; 0, I)`, `C` symmetric.
    Type1Upper,
    /// `(I, 0; C, I)`, `C` symmetric.
    Type1Lower,
    /// `(A, 0; 0, (A^T)^{-1})`, `A` nonsingular.
    Type2,
    /// `(P, 0; 0, P)`, `P` a permutation matrix.
    Type3,
}

/// Result of [`SymplecticContext::symplectic_qr`].
#[derive(Debug, Clone)]
pub struct SymplecticQr {
    /// The symplectic factor.
    pub s: Matrix,
    /// The strictly lower triangular right-upper block of `M·S`.
    pub t: Matrix,
    /// `M·S` itself, of shape `(I_n, T; *, *)`.
    pub product: Matrix,
}

/// Which normal form a permutation was split to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitKind {
    /// `K_2 · P · K_1^T = I_n`.
    Identity,
    /// `K_2 · P · K_1^T` is the full cycle (superdiagonal plus bottom-left 1).
    FullCycle,
}

impl SplitKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SplitKind::Identity => "identity",
            SplitKind::FullCycle => "full_cycle",
        }
    }
}

/// Result of [`permutation_split`].
#[derive(Debug, Clone)]
pub struct PermutationSplit {
    /// Block-diagonal permutation with blocks of sizes `2` and `n-2`.
    pub k1: Matrix,
    /// Block-diagonal permutation with blocks of sizes `n-1` and `1`.
    pub k2: Matrix,
    pub kind: SplitKind,
}

/// The `n x n` full-cycle permutation matrix with `I_{n-1}` on the
/// superdiagonal block and a `1` in the bottom-left corner.
pub fn full_cycle(n: usize) -> Matrix {
    let mut p = Matrix::zeros(n, n);
    for i in 0..n - 1 {
        p.set(i, i + 1, Scalar::one());
    }
    p.set(n - 1, 0, Scalar::one());
    p
}

/// Splits a permutation matrix as `K_2 · P · K_1^T ∈ {I_n, full cycle}`.
///
/// If the last row of `P` carries its `1` within the first two columns the
/// result is the full cycle, otherwise the identity. Both factors are
/// block-diagonal permutations of the shapes required by the scaled
/// automorphism pattern.
pub fn permutation_split(p: &Matrix, n: usize) -> Result<PermutationSplit> {
    if n < 2 {
        return Err(Error::InvalidDimension("permutation split needs n >= 2".into()));
    }
    if p.rows() != n || p.cols() != n {
        return Err(Error::ShapeMismatch(format!("expected a {n}x{n} matrix")));
    }
    if !p.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let bottom_col = (0..n)
        .find(|&c| p.at(n - 1, c).is_one())
        .expect("permutation rows have a 1");

    if bottom_col < 2 {
        // normalize to the full cycle
        let swap2 = if bottom_col == 1 {
            Matrix::from_i64(&[&[0, 1], &[1, 0]])
        } else {
            Matrix::identity(2)
        };
        let k1 = Matrix::block_diag(&[&swap2, &Matrix::identity(n - 2)]);
        let p1 = p * &k1.transpose();
        debug_assert!(p1.at(n - 1, 0).is_one());
        // rows 0..n-1 of columns 1..n form a permutation; invert it
        let q = p1.block(0, 1, n - 1, n - 1);
        let k2 = Matrix::block_diag(&[&q.transpose(), &Matrix::identity(1)]);
        let result = &(&k2 * p) * &k1.transpose();
        if result != full_cycle(n) {
            return Err(Error::Verification("permutation split missed the full cycle".into()));
        }
        Ok(PermutationSplit {
            k1,
            k2,
            kind: SplitKind::FullCycle,
        })
    } else {
        // normalize to the identity: move the bottom 1 to the last column
        let mut tail = Matrix::identity(n - 2);
        if bottom_col != n - 1 {
            let (a, b) = (bottom_col - 2, n - 3);
            tail.set(a, a, Scalar::zero());
            tail.set(b, b, Scalar::zero());
            tail.set(a, b, Scalar::one());
            tail.set(b, a, Scalar::one());
        }
        let k1 = Matrix::block_diag(&[&Matrix::identity(2), &tail]);
        let p1 = p * &k1.transpose();
        debug_assert!(p1.at(n - 1, n - 1).is_one());
        let q = p1.block(0, 0, n - 1, n - 1);
        let k2 = Matrix::block_diag(&[&q.transpose(), &Matrix::identity(1)]);
        let result = &(&k2 * p) * &k1.transpose();
        if !result.is_identity() {
            return Err(Error::Verification("permutation split missed the identity".into()));
        }
        Ok(PermutationSplit {
            k1,
            k2,
            kind: SplitKind::Identity,
        })
    }
}

/// The symmetric matrix `C` for which `C + B` is strictly lower triangular:
/// its diagonal is `-diag(B)` and its strictly lower part is the negated
/// transpose of the strictly upper part of `B`.
pub(crate) fn symmetric_complement(b: &Matrix) -> Matrix {
    let n = b.rows();
    Matrix::from_fn(n, n, |r, c| if r <= c { -b.at(r, c) } else { -b.at(c, r) })
}

/// Factors an `n x n` matrix of rank `r` as `g1 · A · g2 = (I_r, 0; 0, 0)`.
fn full_rank_factor(a: &Matrix, r: usize) -> (Matrix, Matrix) {
    let n = a.rows();
    let (rref, g1, pivots) = a.rref();
    debug_assert_eq!(pivots.len(), r);
    // permute pivot columns to the front, preserving relative order
    let mut order: Vec<usize> = pivots.clone();
    order.extend((0..n).filter(|c| !pivots.contains(c)));
    let mut perm = Matrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        perm.set(old, new, Scalar::one());
    }
    let moved = &rref * &perm;
    // clear the trailing columns of the pivot rows
    let tail = moved.block(0, r, r, n - r);
    let mut clear = Matrix::identity(n);
    clear.set_block(0, r, &-&tail);
    let g2 = &perm * &clear;
    debug_assert!({
        let mut target = Matrix::zeros(n, n);
        target.set_block(0, 0, &Matrix::identity(r));
        &(&g1 * a) * &g2 == target
    });
    (g1, g2)
}
