//! Complex vector / Hermitian matrix arithmetic and the spectral primitives
//! (eigendecomposition, Cholesky solve, rank-one update) the rest of the crate
//! builds on.
//!
//! Matrices are dense and small (array sizes up to a few hundred), so the
//! kernels favour simplicity and unconditional stability over asymptotics:
//! the eigensolver is a cyclic Jacobi sweep with complex rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Cpx = Complex64;

/// Maximum number of Jacobi sweeps before giving up.
const EVD_MAX_SWEEPS: usize = 100;
/// Convergence: off-diagonal Frobenius mass relative to the input norm.
const EVD_TOL: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    data: Vec<Cpx>,
}

impl CVector {
    pub fn new(data: Vec<Cpx>) -> Self {
        assert!(!data.is_empty(), "vector must be non-empty");
        debug_assert!(
            data.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            "vector entries must be finite"
        );
        Self { data }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![Cpx::new(0.0, 0.0); len])
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> Cpx) -> Self {
        Self::new((0..len).map(f).collect())
    }

    /// Standard basis vector e_k.
    pub fn basis(len: usize, k: usize) -> Self {
        let mut v = Self::zeros(len);
        v.data[k] = Cpx::new(1.0, 0.0);
        v
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Cpx] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cpx> {
        self.data.iter()
    }

    /// Inner product with the first argument conjugated: selfᴴ · other.
    pub fn dot(&self, other: &Self) -> Cpx {
        debug_assert_eq!(self.len(), other.len());
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.data.iter().map(|z| z * s).collect())
    }

    pub fn scale_c(&self, s: Cpx) -> Self {
        Self::new(self.data.iter().map(|z| z * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(
            self.data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl std::ops::Index<usize> for CVector {
    type Output = Cpx;
    fn index(&self, i: usize) -> &Cpx {
        &self.data[i]
    }
}

impl std::ops::IndexMut<usize> for CVector {
    fn index_mut(&mut self, i: usize) -> &mut Cpx {
        &mut self.data[i]
    }
}

// ---------------------------------------------------------------------------
// General dense complex matrix (blocking matrices, eigenvector bases)
// ---------------------------------------------------------------------------

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cpx>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        Self {
            rows,
            cols,
            data: vec![Cpx::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Cpx::new(1.0, 0.0));
        }
        m
    }

    pub fn from_columns(cols: &[CVector]) -> Self {
        assert!(!cols.is_empty());
        let rows = cols[0].len();
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.set(i, j, c[i]);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Cpx {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Cpx) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, j: usize) -> CVector {
        CVector::from_fn(self.rows, |i| self.get(i, j))
    }

    /// self · x
    pub fn mul_vec(&self, x: &CVector) -> CVector {
        assert_eq!(x.len(), self.cols);
        CVector::from_fn(self.rows, |i| {
            (0..self.cols).map(|j| self.get(i, j) * x[j]).sum()
        })
    }

    /// selfᴴ · x
    pub fn adjoint_mul_vec(&self, x: &CVector) -> CVector {
        assert_eq!(x.len(), self.rows);
        CVector::from_fn(self.cols, |j| {
            (0..self.rows).map(|i| self.get(i, j).conj() * x[i]).sum()
        })
    }

    /// Max |(selfᴴ·self − I)| entry, used for orthonormality checks.
    pub fn gram_identity_deviation(&self) -> f64 {
        let mut max = 0.0f64;
        for a in 0..self.cols {
            for b in 0..self.cols {
                let mut g = Cpx::new(0.0, 0.0);
                for i in 0..self.rows {
                    g += self.get(i, a).conj() * self.get(i, b);
                }
                if a == b {
                    g -= 1.0;
                }
                max = max.max(g.norm());
            }
        }
        max
    }
}

// ---------------------------------------------------------------------------
// Hermitian matrices
// ---------------------------------------------------------------------------

/// Dense complex Hermitian matrix. The storage is kept exactly Hermitian:
/// every mutation writes one triangle and mirrors the conjugate, and the
/// diagonal stays real.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    order: usize,
    data: Vec<Cpx>,
}

impl HermitianMatrix {
    pub fn zeros(order: usize) -> Self {
        assert!(order > 0, "matrix order must be positive");
        Self {
            order,
            data: vec![Cpx::new(0.0, 0.0); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.data[i * order + i] = Cpx::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = Cpx::new(d, 0.0);
        }
        m
    }

    /// Build from an arbitrary generator, Hermitian-symmetrised as
    /// (A + Aᴴ)/2 with a real diagonal.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Cpx) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                let v = if i == j {
                    Cpx::new(f(i, i).re, 0.0)
                } else {
                    0.5 * (f(i, j) + f(j, i).conj())
                };
                m.data[i * order + j] = v;
                m.data[j * order + i] = v.conj();
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Cpx {
        self.data[r * self.order + c]
    }

    /// Write one entry and its conjugate mirror.
    #[inline]
    pub fn set_sym(&mut self, r: usize, c: usize, v: Cpx) {
        if r == c {
            self.data[r * self.order + c] = Cpx::new(v.re, 0.0);
        } else {
            self.data[r * self.order + c] = v;
            self.data[c * self.order + r] = v.conj();
        }
    }

    /// Sum of the (real) diagonal.
    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i).re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// self + μ·I.
    pub fn add_scaled_identity(&self, mu: f64) -> Self {
        let mut m = self.clone();
        for i in 0..m.order {
            let d = m.data[i * m.order + i];
            m.data[i * m.order + i] = Cpx::new(d.re + mu, 0.0);
        }
        m
    }

    pub fn mul_vec(&self, x: &CVector) -> CVector {
        assert_eq!(x.len(), self.order);
        CVector::from_fn(self.order, |i| {
            (0..self.order).map(|j| self.get(i, j) * x[j]).sum()
        })
    }

    /// Real part of xᴴ·self·x (exactly real for Hermitian self).
    pub fn quadratic_form(&self, x: &CVector) -> f64 {
        x.dot(&self.mul_vec(x)).re
    }

    /// In-place self ← self + scale·y·yᴴ, triangle-mirrored.
    pub fn rank_one_update_in_place(&mut self, y: &CVector, scale: f64) -> Result<()> {
        if y.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                actual: y.len(),
            });
        }
        for i in 0..self.order {
            for j in i..self.order {
                let delta = scale * (y[i] * y[j].conj());
                let v = self.get(i, j) + delta;
                self.set_sym(i, j, v);
            }
        }
        Ok(())
    }

    /// Largest |A − Aᴴ| entry; zero by construction, kept for diagnostics.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut max = 0.0f64;
        for i in 0..self.order {
            for j in 0..self.order {
                max = max.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        max
    }
}

/// R + scale·y·yᴴ as a new matrix.
pub fn rank_one_update(r: &HermitianMatrix, y: &CVector, scale: f64) -> Result<HermitianMatrix> {
    let mut out = r.clone();
    out.rank_one_update_in_place(y, scale)?;
    Ok(out)
}

/// Sum of eigenvalues of a Hermitian matrix (= sum of its real diagonal).
pub fn trace(r: &HermitianMatrix) -> f64 {
    r.trace()
}

// ---------------------------------------------------------------------------
// Spectral bounds
// ---------------------------------------------------------------------------

/// Lower/upper estimates of the extreme eigenvalues of a PSD matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBounds {
    pub lower: f64,
    pub upper: f64,
}

impl SpectralBounds {
    pub fn new(lower: f64, upper: f64) -> Self {
        assert!(
            0.0 <= lower && lower <= upper,
            "bounds must satisfy 0 <= lower <= upper (got {lower}, {upper})"
        );
        Self { lower, upper }
    }
}

// ---------------------------------------------------------------------------
// Eigendecomposition (cyclic Jacobi with complex rotations)
// ---------------------------------------------------------------------------

/// Full spectral decomposition R = V·diag(λ)·Vᴴ with λ ascending and V unitary.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose columns are the matching eigenvectors.
    pub eigenvectors: CMatrix,
}

impl EigenDecomposition {
    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// λ_max/λ_min, +∞ when the matrix is singular but nonzero, 1 for the
    /// zero matrix.
    pub fn condition_number(&self) -> f64 {
        let (lo, hi) = (self.lambda_min(), self.lambda_max());
        if lo > 0.0 {
            hi / lo
        } else if hi == 0.0 && lo == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    }

    /// V·diag(λ)·Vᴴ.
    pub fn reconstruct(&self) -> HermitianMatrix {
        let n = self.eigenvalues.len();
        HermitianMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| {
                    self.eigenvectors.get(i, k)
                        * self.eigenvalues[k]
                        * self.eigenvectors.get(j, k).conj()
                })
                .sum()
        })
    }
}

fn off_diagonal_norm(a: &HermitianMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a.get(i, j).norm_sqr();
        }
    }
    s.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps with
/// complex plane rotations. Deterministic for identical input; converges when
/// the off-diagonal Frobenius mass falls below 1e-12 of the input norm.
pub fn hermitian_evd(r: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = r.order();
    let scale = r.frobenius_norm();
    let tol = EVD_TOL * scale;

    let mut a = r.clone();
    let mut v = CMatrix::identity(n);

    let mut residual = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while residual > tol {
        if sweeps >= EVD_MAX_SWEEPS {
            return Err(Error::EvdNotConverged { sweeps, residual });
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let b = a.get(p, q);
                let beta = b.norm();
                if beta == 0.0 {
                    continue;
                }
                let phase = b / beta;
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;

                // Smaller-magnitude root of the annihilation quadratic.
                let tau = (aqq - app) / (2.0 * beta);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = phase * (t * c);

                // The pivot is annihilated and the diagonal pair moves by ±t·|a_pq|.
                a.set_sym(p, p, Cpx::new(app - t * beta, 0.0));
                a.set_sym(q, q, Cpx::new(aqq + t * beta, 0.0));
                a.set_sym(p, q, Cpx::new(0.0, 0.0));

                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a.get(j, p);
                    let ajq = a.get(j, q);
                    a.set_sym(j, p, c * ajp - s.conj() * ajq);
                    a.set_sym(j, q, s * ajp + c * ajq);
                }
                for j in 0..n {
                    let vjp = v.get(j, p);
                    let vjq = v.get(j, q);
                    v.set(j, p, c * vjp - s.conj() * vjq);
                    v.set(j, q, s * vjp + c * vjq);
                }
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(&a);
    }

    // Sort ascending, permuting eigenvector columns alongside.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for i in 0..n {
            vectors.set(i, dst, v.get(i, src));
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors: vectors,
    })
}

// ---------------------------------------------------------------------------
// Cholesky solve
// ---------------------------------------------------------------------------

/// Solve R·x = b for Hermitian positive-definite R via an LLᴴ factorisation.
/// Fails with `NotPositiveDefinite` on the first non-positive pivot, which is
/// the signal that the caller applied no (or insufficient) diagonal loading.
pub fn cholesky_solve(r: &HermitianMatrix, b: &CVector) -> Result<CVector> {
    let n = r.order();
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: b.len(),
        });
    }

    // Lower-triangular factor, row-major.
    let mut l = vec![Cpx::new(0.0, 0.0); n * n];
    for j in 0..n {
        let mut diag = r.get(j, j).re;
        for k in 0..j {
            diag -= l[j * n + k].norm_sqr();
        }
        if !(diag > 0.0) || !diag.is_finite() {
            return Err(Error::NotPositiveDefinite {
                index: j,
                pivot: diag,
            });
        }
        let ljj = diag.sqrt();
        l[j * n + j] = Cpx::new(ljj, 0.0);
        for i in (j + 1)..n {
            let mut v = r.get(i, j);
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = v / ljj;
        }
    }

    // Forward: L·u = b.
    let mut u = vec![Cpx::new(0.0, 0.0); n];
    for i in 0..n {
        let mut v = b[i];
        for k in 0..i {
            v -= l[i * n + k] * u[k];
        }
        u[i] = v / l[i * n + i].re;
    }

    // Backward: Lᴴ·x = u.
    let mut x = vec![Cpx::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let mut v = u[i];
        for k in (i + 1)..n {
            v -= l[k * n + i].conj() * x[k];
        }
        x[i] = v / l[i * n + i].re;
    }

    Ok(CVector::new(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn random_cvec(n: usize, rng: &mut ChaCha8Rng) -> CVector {
        CVector::from_fn(n, |_| Cpx::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
    }

    /// Random Hermitian PSD matrix built as AᴴA.
    fn random_gram(n: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
        let rows: Vec<CVector> = (0..n).map(|_| random_cvec(n, rng)).collect();
        HermitianMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| rows[k][i].conj() * rows[k][j]).sum()
        })
    }

    fn random_hpd(n: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
        let g = random_gram(n, rng);
        let shift = 0.01 + rng.gen::<f64>();
        g.add_scaled_identity(shift)
    }

    #[test]
    fn evd_identity() {
        let d = hermitian_evd(&HermitianMatrix::identity(3)).unwrap();
        for lam in &d.eigenvalues {
            assert!((lam - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn evd_two_by_two_hand_oracle() {
        // [[2,1],[1,2]]: characteristic polynomial (2-l)^2 - 1 has roots 1, 3.
        let m = HermitianMatrix::from_fn(2, |i, j| {
            if i == j {
                Cpx::new(2.0, 0.0)
            } else {
                Cpx::new(1.0, 0.0)
            }
        });
        let d = hermitian_evd(&m).unwrap();
        assert!((d.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((d.eigenvalues[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn evd_zero_matrix() {
        let d = hermitian_evd(&HermitianMatrix::zeros(4)).unwrap();
        assert!(d.eigenvalues.iter().all(|&l| l == 0.0));
        assert_eq!(d.condition_number(), 1.0);
    }

    #[test]
    fn evd_reconstruction_and_unitarity() {
        let mut r = rng(11);
        for n in [2usize, 3, 7, 16] {
            let m = random_gram(n, &mut r);
            let d = hermitian_evd(&m).unwrap();
            let norm = m.frobenius_norm();
            let rec = d.reconstruct();
            let mut resid = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    resid += (rec.get(i, j) - m.get(i, j)).norm_sqr();
                }
            }
            assert!(resid.sqrt() <= 1e-10 * norm, "reconstruction residual");
            assert!(d.eigenvectors.gram_identity_deviation() <= 1e-10);
            for w in d.eigenvalues.windows(2) {
                assert!(w[0] <= w[1]);
            }
        }
    }

    #[test]
    fn evd_shift_invariance() {
        // eigenvalues of R + mu*I are the eigenvalues of R shifted by mu
        let mut r = rng(12);
        for _ in 0..20 {
            let m = random_gram(6, &mut r);
            let mu = r.gen::<f64>() * 3.0;
            let base = hermitian_evd(&m).unwrap();
            let shifted = hermitian_evd(&m.add_scaled_identity(mu)).unwrap();
            let scale = m.frobenius_norm().max(1.0);
            for (a, b) in base.eigenvalues.iter().zip(shifted.eigenvalues.iter()) {
                assert!((a + mu - b).abs() <= 1e-10 * scale);
            }
        }
    }

    #[test]
    fn trace_examples() {
        assert!((trace(&HermitianMatrix::identity(15)) - 15.0).abs() < 1e-15);
        assert!((trace(&HermitianMatrix::from_diag(&[1.0, 2.0, 3.0])) - 6.0).abs() < 1e-15);
    }

    #[test]
    fn trace_equals_eigenvalue_sum_and_dominates_lambda_max() {
        let mut r = rng(13);
        for _ in 0..50 {
            let m = random_gram(5, &mut r);
            let d = hermitian_evd(&m).unwrap();
            let sum: f64 = d.eigenvalues.iter().sum();
            assert!((trace(&m) - sum).abs() <= 1e-10 * m.frobenius_norm().max(1.0));
            assert!(trace(&m) >= d.lambda_max() - 1e-12 * m.frobenius_norm());
        }
    }

    #[test]
    fn cholesky_identity_and_scalar() {
        let b = CVector::new(vec![
            Cpx::new(1.0, 2.0),
            Cpx::new(-0.5, 0.0),
            Cpx::new(0.0, 3.0),
        ]);
        let x = cholesky_solve(&HermitianMatrix::identity(3), &b).unwrap();
        for i in 0..3 {
            assert!((x[i] - b[i]).norm() < 1e-14);
        }

        let two_i = HermitianMatrix::identity(3).add_scaled_identity(1.0);
        let ones = CVector::new(vec![Cpx::new(1.0, 0.0); 3]);
        let x = cholesky_solve(&two_i, &ones).unwrap();
        for i in 0..3 {
            assert!((x[i] - Cpx::new(0.5, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn cholesky_multiply_back_residual() {
        let mut r = rng(14);
        for _ in 0..50 {
            let m = random_hpd(5, &mut r);
            let b = random_cvec(5, &mut r);
            let x = cholesky_solve(&m, &b).unwrap();
            let back = m.mul_vec(&x);
            let resid = back.sub(&b).norm_sq().sqrt();
            assert!(resid <= 1e-9 * b.norm_sq().sqrt());
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let m = HermitianMatrix::from_diag(&[1.0, -1.0]);
        let b = CVector::new(vec![Cpx::new(1.0, 0.0); 2]);
        match cholesky_solve(&m, &b) {
            Err(Error::NotPositiveDefinite { index: 1, .. }) => {}
            other => panic!("expected NotPositiveDefinite, got {other:?}"),
        }
    }

    #[test]
    fn cholesky_rejects_rank_deficient() {
        // y·yᴴ is PSD but singular
        let y = CVector::new(vec![Cpx::new(1.0, 0.0), Cpx::new(0.0, 1.0)]);
        let m = rank_one_update(&HermitianMatrix::zeros(2), &y, 1.0).unwrap();
        let b = CVector::new(vec![Cpx::new(1.0, 0.0); 2]);
        assert!(cholesky_solve(&m, &b).is_err());
    }

    #[test]
    fn rank_one_basics() {
        let e1 = CVector::basis(3, 0);
        let m = rank_one_update(&HermitianMatrix::zeros(3), &e1, 1.0).unwrap();
        assert!((m.get(0, 0) - Cpx::new(1.0, 0.0)).norm() < 1e-15);
        assert!((m.frobenius_norm() - 1.0).abs() < 1e-15);

        // add then remove the same snapshot restores the original
        let mut r = rng(15);
        let base = random_gram(4, &mut r);
        let y = random_cvec(4, &mut r);
        let up = rank_one_update(&base, &y, 1.0 / 8.0).unwrap();
        let down = rank_one_update(&up, &y, -1.0 / 8.0).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((down.get(i, j) - base.get(i, j)).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn rank_one_sequential_matches_batch() {
        let mut r = rng(16);
        let l = 12usize;
        let snaps: Vec<CVector> = (0..l).map(|_| random_cvec(5, &mut r)).collect();
        let mut inc = HermitianMatrix::zeros(5);
        for y in &snaps {
            inc.rank_one_update_in_place(y, 1.0 / l as f64).unwrap();
        }
        let batch = HermitianMatrix::from_fn(5, |i, j| {
            snaps.iter().map(|y| (y[i] * y[j].conj()) / l as f64).sum()
        });
        let scale = batch.frobenius_norm();
        for i in 0..5 {
            for j in 0..5 {
                assert!((inc.get(i, j) - batch.get(i, j)).norm() <= 1e-10 * scale);
            }
        }
    }

    #[test]
    fn rank_one_dimension_mismatch() {
        let y = CVector::zeros(3);
        let m = HermitianMatrix::zeros(4);
        assert!(matches!(
            rank_one_update(&m, &y, 1.0),
            Err(Error::DimensionMismatch {
                expected: 4,
                actual: 3
            })
        ));
    }

    #[test]
    fn kantorovich_inequality_holds() {
        // (xᴴx)² / ((xᴴRx)(xᴴR⁻¹x)) >= 4k/(k+1)² for HPD R
        let mut r = rng(17);
        for _ in 0..1000 {
            let m = random_hpd(4, &mut r);
            let x = random_cvec(4, &mut r);
            let d = hermitian_evd(&m).unwrap();
            let kappa = d.condition_number();
            let bound = 4.0 * kappa / ((kappa + 1.0) * (kappa + 1.0));
            let rx = m.quadratic_form(&x);
            let rinv_x = cholesky_solve(&m, &x).unwrap();
            let rinv_quad = x.dot(&rinv_x).re;
            let lhs = x.norm_sq().powi(2) / (rx * rinv_quad);
            assert!(lhs >= bound * (1.0 - 1e-12), "lhs {lhs} < bound {bound}");
        }
    }

    #[test]
    fn storage_is_exactly_hermitian() {
        let mut r = rng(18);
        let mut m = random_gram(6, &mut r);
        for _ in 0..500 {
            let y = random_cvec(6, &mut r);
            m.rank_one_update_in_place(&y, 0.1).unwrap();
            m.rank_one_update_in_place(&y, -0.1).unwrap();
        }
        assert_eq!(m.hermitian_deviation(), 0.0);
    }
}
