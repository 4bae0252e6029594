//! Seeded random generators for subspaces, states and unitaries.
//!
//! All randomness in the crate flows through [`rng_from_seed`] so that runs
//! are reproducible across platforms.

use nalgebra::DVector;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::jnr::DensityMatrix;
use crate::linalg::{orthonormalize, real, CMatrix, CVector, C64};
use crate::subspace::Subspace;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian vector (independent real and imaginary parts).
pub fn complex_gaussian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVector {
    CVector::from_fn(n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im)
    })
}

/// Uniform point on the unit sphere of `C^n`.
pub fn unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CVector {
    loop {
        let z = complex_gaussian(n, rng);
        let norm = z.norm();
        if norm > 1e-300 {
            return z / real(norm);
        }
    }
}

/// Uniform unit vector of `s` (uniform in the coefficient sphere of `C^r`).
pub fn unit_vector_in<R: Rng + ?Sized>(s: &Subspace, rng: &mut R) -> CVector {
    s.basis() * unit_vector(s.dim(), rng)
}

/// Gaussian vector in `R^n`, normalized.
pub fn real_direction<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = v.norm();
        if norm > 1e-300 {
            return v / norm;
        }
    }
}

/// Haar-distributed unitary (orthonormalized complex Gaussian matrix).
pub fn unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    loop {
        let cols: Vec<CVector> = (0..n).map(|_| complex_gaussian(n, rng)).collect();
        let q = orthonormalize(&cols).expect("non-empty");
        if q.ncols() == n {
            return q;
        }
    }
}

/// Random `r`-dimensional subspace of `C^n`.
pub fn subspace<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Subspace {
    assert!(r >= 1 && r <= n, "need 1 <= r <= n");
    let u = unitary(n, rng);
    Subspace::from_orthonormal(u.columns(0, r).into_owned()).expect("orthonormal columns")
}

/// Random full-rank density matrix `G G* / tr(G G*)`.
pub fn density<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DensityMatrix {
    density_of_rank(n, n, rng)
}

pub fn density_of_rank<R: Rng + ?Sized>(n: usize, rank: usize, rng: &mut R) -> DensityMatrix {
    let cols: Vec<CVector> = (0..rank).map(|_| complex_gaussian(n, rng)).collect();
    let g = CMatrix::from_columns(&cols);
    let m = &g * g.adjoint();
    let t = m.trace().re;
    DensityMatrix::new(m / real(t)).expect("gram matrix is a valid state")
}
