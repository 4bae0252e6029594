//! Dense complex linear algebra: hermitian eigendecomposition, Gram-Schmidt
//! orthonormalization, orthogonal projectors and the spectral norm.
//!
//! Everything here works on small dense matrices (n up to a few dozen) and is
//! deterministic for a fixed input: eigenvalues are sorted ascending and each
//! eigenvector is rotated so its first non-negligible component is real and
//! positive.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Maximum entrywise asymmetry accepted for a hermitian input.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance on `Q*Q = I` for projector construction.
pub const ORTHONORMAL_TOL: f64 = 1e-10;
/// Relative residual below which Gram-Schmidt drops a column.
pub const RANK_TOL: f64 = 1e-10;

const PHASE_TOL: f64 = 1e-12;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `⟨x, y⟩ = Σ x_i conj(y_i)`, linear in the first argument.
pub fn inner(x: &CVector, y: &CVector) -> C64 {
    y.dotc(x)
}

/// Rank-one operator `v ⊗ v = v v*`.
pub fn outer(v: &CVector) -> CMatrix {
    v * v.adjoint()
}

/// `e^{i arg z}`, with `arg 0 = 0`.
pub fn unit_phase(z: C64) -> C64 {
    let r = z.norm();
    if r == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        z / r
    }
}

/// Coordinatewise squared moduli `|v|² = (|v_1|², …, |v_n|²)`.
pub fn squared_moduli(v: &CVector) -> DVector<f64> {
    v.map(|z| z.norm_sqr())
}

/// Real parts of the diagonal.
pub fn real_diagonal(m: &CMatrix) -> DVector<f64> {
    DVector::from_iterator(m.nrows(), (0..m.nrows()).map(|i| m[(i, i)].re))
}

pub fn diag_matrix(d: &DVector<f64>) -> CMatrix {
    CMatrix::from_diagonal(&d.map(real))
}

/// Largest entry of `|A - A*|`.
pub fn max_asymmetry(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((a[(i, j)] - a[(j, i)].conj()).norm());
        }
    }
    worst
}

/// A square complex matrix that equals its adjoint.
///
/// Construction symmetrizes the stored entries, so the diagonal is exactly
/// real and `A = A*` holds bitwise afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(CMatrix);

impl HermitianMatrix {
    /// Validates `a` against [`HERMITIAN_TOL`].
    pub fn new(a: CMatrix) -> Result<Self> {
        Self::with_tolerance(a, HERMITIAN_TOL)
    }

    pub fn with_tolerance(a: CMatrix, tol: f64) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::DimensionMismatch {
                expected: a.nrows(),
                found: a.ncols(),
            });
        }
        if a.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let asym = max_asymmetry(&a);
        if asym > tol {
            return Err(Error::NotHermitian {
                max_asymmetry: asym,
            });
        }
        Ok(Self::symmetrized(a))
    }

    /// Hermitian part `(A + A*)/2` of an arbitrary square matrix.
    pub(crate) fn symmetrized(a: CMatrix) -> Self {
        let mut h = (&a + a.adjoint()) * real(0.5);
        for i in 0..h.nrows() {
            h[(i, i)].im = 0.0;
        }
        Self(h)
    }

    pub fn from_real_diagonal(d: &DVector<f64>) -> Self {
        Self(diag_matrix(d))
    }

    pub fn identity(n: usize) -> Self {
        Self(CMatrix::identity(n, n))
    }

    pub fn zeros(n: usize) -> Self {
        Self(CMatrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_inner(self) -> CMatrix {
        self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    pub fn diagonal(&self) -> DVector<f64> {
        real_diagonal(&self.0)
    }

    pub fn eig(&self) -> EigenDecomposition {
        hermitian_eig(self)
    }

    /// Largest eigenvalue with a unit eigenvector.
    pub fn top_eigenpair(&self) -> (f64, CVector) {
        let e = self.eig();
        let last = e.eigenvalues.len() - 1;
        (e.eigenvalues[last], e.eigenvectors.column(last).into_owned())
    }

    /// Smallest eigenvalue with a unit eigenvector.
    pub fn bottom_eigenpair(&self) -> (f64, CVector) {
        let e = self.eig();
        (e.eigenvalues[0], e.eigenvectors.column(0).into_owned())
    }

    pub fn spectral_norm(&self) -> f64 {
        let e = self.eig();
        e.eigenvalues
            .iter()
            .fold(0.0_f64, |acc, &l| acc.max(l.abs()))
    }
}

impl AsRef<CMatrix> for HermitianMatrix {
    fn as_ref(&self) -> &CMatrix {
        &self.0
    }
}

/// Spectral decomposition `A = V Λ V*` of a hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `eigenvalues`.
    pub eigenvectors: CMatrix,
}

impl EigenDecomposition {
    pub fn reconstruct(&self) -> CMatrix {
        let lambda = CMatrix::from_diagonal(&DVector::from_iterator(
            self.eigenvalues.len(),
            self.eigenvalues.iter().map(|&l| real(l)),
        ));
        &self.eigenvectors * lambda * self.eigenvectors.adjoint()
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Columns whose eigenvalue satisfies `keep`.
    pub fn select(&self, keep: impl Fn(f64) -> bool) -> Vec<CVector> {
        self.eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &l)| keep(l))
            .map(|(i, _)| self.eigenvectors.column(i).into_owned())
            .collect()
    }
}

/// Rotates `v` so that its first component with modulus above the phase
/// tolerance is real and positive.
fn normalize_phase(v: &mut CVector) {
    if let Some(z) = v.iter().copied().find(|z| z.norm() > PHASE_TOL) {
        let p = unit_phase(z).conj();
        *v *= p;
    }
}

pub fn hermitian_eig(a: &HermitianMatrix) -> EigenDecomposition {
    let n = a.dim();
    if n == 0 {
        return EigenDecomposition {
            eigenvalues: Vec::new(),
            eigenvectors: CMatrix::zeros(0, 0),
        };
    }
    let eig = a.as_matrix().clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]).then(i.cmp(&j)));
    let mut vectors = CMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        values.push(eig.eigenvalues[src]);
        let mut v = eig.eigenvectors.column(src).into_owned();
        normalize_phase(&mut v);
        vectors.set_column(dst, &v);
    }
    EigenDecomposition {
        eigenvalues: values,
        eigenvectors: vectors,
    }
}

/// Checks hermiticity of a raw matrix before decomposing it.
pub fn hermitian_eig_checked(a: &CMatrix) -> Result<EigenDecomposition> {
    Ok(hermitian_eig(&HermitianMatrix::new(a.clone())?))
}

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// A column is dropped when its residual after both passes falls below
/// `RANK_TOL` times its own input norm, so the output has as many columns as
/// the numerical rank of the input.
pub fn orthonormalize(vectors: &[CVector]) -> Result<CMatrix> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let n = first.len();
    let mut basis: Vec<CVector> = Vec::new();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let input_norm = v.norm();
        if input_norm == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &basis {
                let proj = inner(&w, q);
                w -= q * proj;
            }
        }
        let residual = w.norm();
        if residual < RANK_TOL * input_norm {
            continue;
        }
        basis.push(w / real(residual));
    }
    Ok(if basis.is_empty() {
        CMatrix::zeros(n, 0)
    } else {
        CMatrix::from_columns(&basis)
    })
}

/// Largest entry of `|Q*Q - I|`.
pub fn orthonormality_defect(q: &CMatrix) -> f64 {
    let g = q.adjoint() * q;
    let k = g.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g[(i, j)] - real(target)).norm());
        }
    }
    worst
}

/// `P = Q Q*` for a matrix `Q` with orthonormal columns.
pub fn projector(q: &CMatrix) -> Result<HermitianMatrix> {
    let defect = orthonormality_defect(q);
    if defect > ORTHONORMAL_TOL {
        return Err(Error::NotOrthonormal { deviation: defect });
    }
    Ok(HermitianMatrix::symmetrized(q * q.adjoint()))
}

/// Operator 2-norm `sup_{‖x‖=1} ‖Ax‖`, i.e. the largest singular value.
pub fn spectral_norm(a: &CMatrix) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    let gram = if a.nrows() >= a.ncols() {
        a.adjoint() * a
    } else {
        a * a.adjoint()
    };
    let top = hermitian_eig(&HermitianMatrix::symmetrized(gram)).max();
    top.max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pauli_y() -> CMatrix {
        CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    fn vec_r(xs: &[f64]) -> CVector {
        CVector::from_iterator(xs.len(), xs.iter().map(|&x| real(x)))
    }

    #[test]
    fn identity_spectrum() {
        let e = hermitian_eig(&HermitianMatrix::identity(3));
        assert_eq!(e.eigenvalues.len(), 3);
        for l in e.eigenvalues {
            assert_abs_diff_eq!(l, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn pauli_y_spectrum() {
        let e = hermitian_eig_checked(&pauli_y()).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);
        // phase convention: first non-zero component real positive
        for col in e.eigenvectors.column_iter() {
            let z = col.iter().find(|z| z.norm() > 1e-12).unwrap();
            assert!(z.im.abs() < 1e-15 && z.re > 0.0);
        }
    }

    #[test]
    fn projector_spectrum_is_zero_one_one() {
        let third = 1.0 / 3.0;
        let p = CMatrix::from_row_slice(
            3,
            3,
            &[
                real(2.0 * third),
                real(third),
                real(-third),
                real(third),
                real(2.0 * third),
                real(third),
                real(-third),
                real(third),
                real(2.0 * third),
            ],
        );
        assert!((&p * &p - &p).norm() < 1e-15);
        let e = hermitian_eig_checked(&p).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[2], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn rejects_non_hermitian_with_asymmetry() {
        let m = CMatrix::from_row_slice(2, 2, &[real(0.0), real(1.0), real(0.5), real(0.0)]);
        match HermitianMatrix::new(m) {
            Err(Error::NotHermitian { max_asymmetry }) => assert_abs_diff_eq!(max_asymmetry, 0.5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn orthonormalize_cases() {
        let q = orthonormalize(&[vec_r(&[1.0, 0.0]), vec_r(&[0.0, 1.0])]).unwrap();
        assert_eq!(q, CMatrix::identity(2, 2));

        let q = orthonormalize(&[vec_r(&[1.0, 1.0, 0.0]), vec_r(&[0.0, 1.0, 1.0])]).unwrap();
        assert_eq!(q.ncols(), 2);
        assert!(orthonormality_defect(&q) < 1e-12);

        let q = orthonormalize(&[vec_r(&[1.0, 0.0]), vec_r(&[2.0, 0.0])]).unwrap();
        assert_eq!(q.ncols(), 1);
        assert_eq!(q.column(0).into_owned(), vec_r(&[1.0, 0.0]));

        let q = orthonormalize(&[vec_r(&[0.0, 0.0, 0.0])]).unwrap();
        assert_eq!(q.shape(), (3, 0));

        assert_eq!(orthonormalize(&[]), Err(Error::EmptyInput));
        assert!(matches!(
            orthonormalize(&[vec_r(&[1.0]), vec_r(&[1.0, 2.0])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn projector_cases() {
        let q = CMatrix::from_column_slice(2, 1, &[real(1.0), real(0.0)]);
        let p = projector(&q).unwrap();
        assert_eq!(p.as_matrix(), &CMatrix::from_row_slice(2, 2, &[real(1.0), real(0.0), real(0.0), real(0.0)]));

        let p = projector(&CMatrix::identity(4, 4)).unwrap();
        assert_eq!(p.as_matrix(), &CMatrix::identity(4, 4));

        let bad = CMatrix::from_column_slice(2, 1, &[real(2.0), real(0.0)]);
        assert!(matches!(projector(&bad), Err(Error::NotOrthonormal { .. })));
    }

    #[test]
    fn spectral_norm_cases() {
        assert_eq!(spectral_norm(&CMatrix::zeros(3, 3)), 0.0);
        assert_abs_diff_eq!(spectral_norm(&pauli_y()), 1.0, epsilon = 1e-14);
        let d = CMatrix::from_diagonal(&vec_r(&[3.0, -5.0]));
        assert_abs_diff_eq!(spectral_norm(&d), 5.0, epsilon = 1e-13);
        let rect = CMatrix::from_row_slice(1, 2, &[real(3.0), real(4.0)]);
        assert_abs_diff_eq!(spectral_norm(&rect), 5.0, epsilon = 1e-13);
    }

    #[test]
    fn unit_phase_of_zero_is_one() {
        assert_eq!(unit_phase(C64::new(0.0, 0.0)), C64::new(1.0, 0.0));
        assert_abs_diff_eq!(unit_phase(c(0.0, -2.0)).im, -1.0);
    }
}
