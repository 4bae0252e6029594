#![allow(dead_code)]

use std::f64::consts::PI;

use momentkit::linalg::{c, outer, real, CMatrix, CVector, HermitianMatrix};
use momentkit::random::{self, rng_from_seed};
use momentkit::subspace::Subspace;
use rand::Rng;

pub fn cv(xs: &[(f64, f64)]) -> CVector {
    CVector::from_iterator(xs.len(), xs.iter().map(|&(a, b)| c(a, b)))
}

pub fn rv(xs: &[f64]) -> CVector {
    CVector::from_iterator(xs.len(), xs.iter().map(|&x| real(x)))
}

pub fn span(vs: &[CVector]) -> Subspace {
    Subspace::from_spanning(vs).unwrap()
}

pub fn plane_v() -> Subspace {
    span(&[rv(&[1.0, 1.0, 0.0]), rv(&[0.0, 1.0, 1.0])])
}

pub fn plane_w() -> Subspace {
    let e = |t: f64| c(t.cos(), t.sin());
    span(&[
        CVector::from_vec(vec![real(-1.0), e(PI / 4.0), real(0.0)]),
        CVector::from_vec(vec![real(0.0), e(PI / 3.0), e(PI / 6.0)]),
    ])
}

/// `span{(1, i)/√2}` and `span{(1, −i)/√2}`.
pub fn conjugate_lines() -> (Subspace, Subspace) {
    let h = 0.5f64.sqrt();
    (span(&[cv(&[(h, 0.0), (0.0, h)])]), span(&[cv(&[(h, 0.0), (0.0, -h)])]))
}

pub fn hermitian(rows: &[&[(f64, f64)]]) -> HermitianMatrix {
    let n = rows.len();
    HermitianMatrix::new(CMatrix::from_fn(n, n, |i, j| c(rows[i][j].0, rows[i][j].1))).unwrap()
}

pub fn pauli_y() -> HermitianMatrix {
    hermitian(&[&[(0.0, 0.0), (0.0, -1.0)], &[(0.0, 1.0), (0.0, 0.0)]])
}

pub fn pauli_x() -> HermitianMatrix {
    hermitian(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 0.0)]])
}

pub fn diag_pm() -> HermitianMatrix {
    hermitian(&[&[(1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (-1.0, 0.0)]])
}

pub fn gue(n: usize, rng: &mut impl Rng) -> HermitianMatrix {
    let g = random::complex_gaussian(n * n, rng);
    let a = CMatrix::from_column_slice(n, n, g.as_slice());
    HermitianMatrix::new((&a + a.adjoint()) * real(0.5)).unwrap()
}

/// Shifts the spectrum so that `λ_max = −λ_min`.
pub fn centered(m: &HermitianMatrix) -> HermitianMatrix {
    let e = m.eig();
    let shift = 0.5 * (e.max() + e.min());
    let n = m.dim();
    HermitianMatrix::new(m.as_matrix() - CMatrix::identity(n, n) * real(shift)).unwrap()
}

/// `λ(P_V − P_W)` for a random line `W = span{w}` in `C³` and `V = W^⊥`.
pub fn line_and_complement(rng: &mut impl Rng) -> HermitianMatrix {
    let w = random::unit_vector(3, rng);
    let lambda = rng.random_range(0.5..2.0);
    let pw = outer(&w);
    let pv = CMatrix::identity(3, 3) - &pw;
    HermitianMatrix::new((pv - pw) * real(lambda)).unwrap()
}

/// `λ(P_V − P_W) + μ w ⊗ w` built from a conjugate pair `V = span{x}`,
/// `W = span{x̄}` with `Σ x_i² = 0`, moved by a random diagonal unitary and a
/// random coordinate permutation (both preserve minimality).
pub fn constructed_minimal(n: usize, rng: &mut impl Rng) -> HermitianMatrix {
    let e = |t: f64| c(t.cos(), t.sin());
    let (x, w) = match n {
        2 => (CVector::from_vec(vec![real(1.0), c(0.0, 1.0)]) / real(2f64.sqrt()), None),
        3 => (
            CVector::from_vec(vec![real(1.0), e(PI / 3.0), e(2.0 * PI / 3.0)]) / real(3f64.sqrt()),
            Some(rv(&[1.0, -1.0, 1.0]) / real(3f64.sqrt())),
        ),
        _ => panic!("n must be 2 or 3"),
    };
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    let phases: Vec<_> = (0..n).map(|_| e(rng.random_range(0.0..2.0 * PI))).collect();
    let moved = |v: &CVector| CVector::from_fn(n, |i, _| v[perm[i]] * phases[perm[i]]);
    let lambda = rng.random_range(0.5..2.0);
    let mut m = (outer(&moved(&x)) - outer(&moved(&x.conjugate()))) * real(lambda);
    if let Some(w) = w {
        let mu = rng.random_range(-0.9..0.9) * lambda;
        m += outer(&moved(&w)) * real(mu);
    }
    HermitianMatrix::new(m).unwrap()
}

/// A named hermitian matrix of the minimality battery.
pub struct Case {
    pub name: String,
    pub matrix: HermitianMatrix,
}

/// Three named anchors, a scaled conjugate-pair matrix and 20 seeded random
/// matrices of size 2 or 3.
pub fn minimality_battery() -> Vec<Case> {
    let (v, w) = conjugate_lines();
    let scaled = HermitianMatrix::new((v.projector().as_matrix() - w.projector().as_matrix()) * real(2.0)).unwrap();
    let mut cases = vec![
        Case { name: "pauli_y".into(), matrix: pauli_y() },
        Case { name: "diag(1,-1)".into(), matrix: diag_pm() },
        Case { name: "pauli_x".into(), matrix: pauli_x() },
        Case { name: "2(P_V-P_W) conjugate lines".into(), matrix: scaled },
    ];
    let mut rng = rng_from_seed(2024);
    for k in 0..20 {
        let n = 2 + k % 2;
        let (kind, matrix) = match k % 3 {
            0 => ("gue", gue(n, &mut rng)),
            1 => ("centered gue", centered(&gue(n, &mut rng))),
            _ => ("constructed minimal", constructed_minimal(n, &mut rng)),
        };
        cases.push(Case { name: format!("random {k} ({kind}, n = {})", matrix.dim()), matrix });
    }
    cases
}
