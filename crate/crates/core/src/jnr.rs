//! Joint numerical range `W(P E_1 P, …, P E_n P)` of the compressed
//! coordinate projections, and its relation to the moment set.
//!
//! `W` is only ever accessed through the map `Δ(ρ) = diag(P ρ P)` and its
//! exact support function `λ_max(Σ c_i P E_i P)`.

use nalgebra::DVector;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{
    diag_matrix, outer, real, real_diagonal, CMatrix, CVector, HermitianMatrix,
};
use crate::minimality::{project_onto_moment, FwOptions};
use crate::random::{rng_from_seed, unit_vector};
use crate::subspace::Subspace;

/// Lowest eigenvalue accepted for a density matrix.
pub const PSD_TOL: f64 = 1e-10;
/// Accepted deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// A `Δ(ρ)` lies on the unit-sum slice when its coordinates sum to `1 ± SLICE_TOL`.
pub const SLICE_TOL: f64 = 1e-9;
/// Distance to `m_S` below which a point counts as a member.
pub const MEMBERSHIP_DISTANCE: f64 = 1e-6;

/// Hermitian positive semidefinite matrix of unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(HermitianMatrix);

impl DensityMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let h = HermitianMatrix::new(m).map_err(|e| Error::InvalidDensity(e.to_string()))?;
        Self::from_hermitian(h)
    }

    pub fn from_hermitian(h: HermitianMatrix) -> Result<Self> {
        let trace = h.trace();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("trace is {trace}, expected 1")));
        }
        let min = h.eig().min();
        if min < -PSD_TOL {
            return Err(Error::InvalidDensity(format!(
                "not positive semidefinite (min eigenvalue {min:e})"
            )));
        }
        Ok(Self(h))
    }

    /// Pure state `v ⊗ v` of a unit vector.
    pub fn pure(v: &CVector) -> Result<Self> {
        let norm = v.norm();
        if (norm - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidDensity(format!("vector norm is {norm}, expected 1")));
        }
        Ok(Self(HermitianMatrix::symmetrized(outer(v))))
    }

    /// Convex combination `Σ w_i ρ_i`; weights must be non-negative and sum to one.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = parts.first().ok_or(Error::EmptyInput)?;
        let n = first.1.dim();
        let mut acc = CMatrix::zeros(n, n);
        for (w, rho) in parts {
            if *w < 0.0 {
                return Err(Error::InvalidDensity(format!("negative weight {w}")));
            }
            if rho.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: rho.dim(),
                });
            }
            acc += rho.as_matrix() * real(*w);
        }
        Self::from_hermitian(HermitianMatrix::symmetrized(acc))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        self.0.as_matrix()
    }

    pub fn as_hermitian(&self) -> &HermitianMatrix {
        &self.0
    }
}

/// A point `Δ(ρ)` of the joint numerical range with the state producing it.
#[derive(Debug, Clone, PartialEq)]
pub struct JnrPoint {
    pub x: DVector<f64>,
    pub witness: DensityMatrix,
}

impl JnrPoint {
    pub fn sum(&self) -> f64 {
        self.x.sum()
    }
}

/// Joint numerical range of an arbitrary tuple of hermitian matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct JointNumericalRange {
    matrices: Vec<HermitianMatrix>,
}

impl JointNumericalRange {
    pub fn new(matrices: Vec<HermitianMatrix>) -> Result<Self> {
        let n = matrices.first().ok_or(Error::EmptyInput)?.dim();
        if let Some(m) = matrices.iter().find(|m| m.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.dim(),
            });
        }
        Ok(Self { matrices })
    }

    /// `(P B_1 P, …, P B_n P)` with `B_i` the projection onto column `i` of `basis`.
    pub fn of_subspace_in_basis(s: &Subspace, basis: &CMatrix) -> Result<Self> {
        let p = s.projector().as_matrix();
        let matrices = basis
            .column_iter()
            .map(|b| HermitianMatrix::symmetrized(p * outer(&b.into_owned()) * p))
            .collect();
        Self::new(matrices)
    }

    /// `(P E_1 P, …, P E_n P)` in the standard basis.
    pub fn of_subspace(s: &Subspace) -> Self {
        let n = s.ambient_dim();
        Self::of_subspace_in_basis(s, &CMatrix::identity(n, n)).expect("non-empty tuple")
    }

    pub fn matrices(&self) -> &[HermitianMatrix] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    /// `(tr(A_1 ρ), …, tr(A_m ρ))`.
    pub fn point(&self, rho: &DensityMatrix) -> Result<DVector<f64>> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rho.dim(),
            });
        }
        Ok(DVector::from_iterator(
            self.matrices.len(),
            self.matrices
                .iter()
                .map(|a| (a.as_matrix() * rho.as_matrix()).trace().re),
        ))
    }

    /// Support function `λ_max(Σ c_i A_i)` with a maximizing unit vector.
    pub fn support(&self, c: &DVector<f64>) -> Result<(f64, CVector)> {
        if c.len() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                found: c.len(),
            });
        }
        let n = self.dim();
        let mut acc = CMatrix::zeros(n, n);
        for (w, a) in c.iter().zip(&self.matrices) {
            acc += a.as_matrix() * real(*w);
        }
        Ok(HermitianMatrix::symmetrized(acc).top_eigenpair())
    }
}

fn check_state(s: &Subspace, rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: rho.dim(),
        });
    }
    Ok(())
}

/// `Δ(ρ) = diag(P ρ P)`.
pub fn delta_map(s: &Subspace, rho: &DensityMatrix) -> Result<JnrPoint> {
    check_state(s, rho)?;
    let p = s.projector().as_matrix();
    let compressed = p * rho.as_matrix() * p;
    Ok(JnrPoint {
        x: real_diagonal(&compressed),
        witness: rho.clone(),
    })
}

/// Support value of `W` with a rank-one maximizing state.
#[derive(Debug, Clone, PartialEq)]
pub struct JnrSupport {
    pub value: f64,
    pub witness: DensityMatrix,
}

/// `h_W(c) = λ_max(P diag(c) P)`, computed on the full `n × n` compression.
pub fn jnr_support(s: &Subspace, c: &DVector<f64>) -> Result<JnrSupport> {
    if c.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: c.len(),
        });
    }
    if c.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let p = s.projector().as_matrix();
    let a = HermitianMatrix::symmetrized(p * diag_matrix(c) * p);
    let (value, v) = a.top_eigenpair();
    Ok(JnrSupport {
        value,
        witness: DensityMatrix::pure(&v)?,
    })
}

/// The same support value through the `r × r` reduction `Q* diag(c) Q`,
/// clamped at zero when `S ≠ C^n` (a state on `S^⊥` maps to the origin).
pub fn jnr_support_reduced(s: &Subspace, c: &DVector<f64>) -> Result<f64> {
    let top = crate::moment::support_moment(s, c)?.value;
    Ok(if s.is_whole_space() { top } else { top.max(0.0) })
}

/// Boundary points of `W`, one per direction.
pub fn jnr_boundary(s: &Subspace, directions: &[DVector<f64>]) -> Result<Vec<JnrPoint>> {
    if let Some(i) = directions.iter().position(|d| d.iter().all(|&x| x == 0.0)) {
        return Err(Error::InvalidParameter(format!("direction {i} is zero")));
    }
    directions
        .par_iter()
        .map(|c| {
            let sup = jnr_support(s, c)?;
            delta_map(s, &sup.witness)
        })
        .collect()
}

/// Root of `x^{d+1} = x + 1`, the generalized golden ratio.
fn generalized_golden_ratio(d: usize) -> f64 {
    let mut x: f64 = 2.0;
    for _ in 0..64 {
        x = (1.0 + x).powf(1.0 / (d as f64 + 1.0));
    }
    x
}

/// `k` deterministic, well spread unit directions of `R^n`.
///
/// Uses the golden-angle spiral for `n = 2, 3` and a Kronecker low-discrepancy
/// sequence pushed through Box-Muller for higher dimensions.
pub fn fibonacci_directions(n: usize, k: usize) -> Vec<DVector<f64>> {
    use std::f64::consts::PI;
    match n {
        0 => Vec::new(),
        1 => (0..k)
            .map(|i| DVector::from_element(1, if i % 2 == 0 { 1.0 } else { -1.0 }))
            .collect(),
        2 => (0..k)
            .map(|i| {
                let a = 2.0 * PI * (i as f64 + 0.5) / k as f64;
                DVector::from_vec(vec![a.cos(), a.sin()])
            })
            .collect(),
        3 => {
            let golden = PI * (3.0 - 5f64.sqrt());
            (0..k)
                .map(|i| {
                    let z = 1.0 - (2.0 * i as f64 + 1.0) / k as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = golden * i as f64;
                    DVector::from_vec(vec![r * phi.cos(), r * phi.sin(), z])
                })
                .collect()
        }
        _ => {
            let m = n + n % 2;
            let g = generalized_golden_ratio(m);
            let alpha: Vec<f64> = (1..=m).map(|p| (1.0 / g.powi(p as i32)).fract()).collect();
            (0..k)
                .map(|i| {
                    let u: Vec<f64> = alpha
                        .iter()
                        .map(|a| (0.5 + (i as f64 + 1.0) * a).fract().clamp(1e-12, 1.0 - 1e-12))
                        .collect();
                    let mut g = Vec::with_capacity(m);
                    for pair in u.chunks(2) {
                        let r = (-2.0 * pair[0].ln()).sqrt();
                        let th = 2.0 * PI * pair[1];
                        g.push(r * th.cos());
                        g.push(r * th.sin());
                    }
                    g.truncate(n);
                    let v = DVector::from_vec(g);
                    let norm = v.norm();
                    v / norm
                })
                .collect()
        }
    }
}

/// Outcome of testing `m_S = W ∩ {Σ x_i = 1}` at one state.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceVerdict {
    pub point: DVector<f64>,
    pub sum: f64,
    pub on_slice: bool,
    /// Distance from `m_S` (only computed on the slice).
    pub moment_distance: Option<f64>,
    /// On the slice and within [`MEMBERSHIP_DISTANCE`] of `m_S`.
    pub moment_member: Option<bool>,
}

impl SliceVerdict {
    /// The identity holds at this state: off the slice, or on it and in `m_S`.
    pub fn consistent(&self) -> bool {
        !self.on_slice || self.moment_member == Some(true)
    }
}

pub fn hyperplane_slice_check(
    s: &Subspace,
    rho: &DensityMatrix,
    options: &FwOptions,
) -> Result<SliceVerdict> {
    let p = delta_map(s, rho)?;
    let sum = p.sum();
    let on_slice = (sum - 1.0).abs() <= SLICE_TOL;
    let (moment_distance, moment_member) = if on_slice {
        let proj = project_onto_moment(s, &p.x, options)?;
        (Some(proj.distance), Some(proj.distance <= MEMBERSHIP_DISTANCE))
    } else {
        (None, None)
    };
    Ok(SliceVerdict {
        point: p.x,
        sum,
        on_slice,
        moment_distance,
        moment_member,
    })
}

/// Outcome of testing `x ∈ cone(W) = cone(m_S)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeVerdict {
    pub member: bool,
    /// `Σ x_i`, the factor with `x / scaling ∈ m_S` (zero for the origin).
    pub scaling: f64,
    /// Distance from `x / scaling` to `m_S`.
    pub distance: f64,
}

pub fn cone_membership(s: &Subspace, x: &DVector<f64>, options: &FwOptions) -> Result<ConeVerdict> {
    if x.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: x.len(),
        });
    }
    if let Some((index, &value)) = x.iter().enumerate().find(|(_, v)| **v < 0.0) {
        return Err(Error::NegativeCoordinate { index, value });
    }
    let scaling = x.sum();
    if scaling == 0.0 {
        return Ok(ConeVerdict {
            member: true,
            scaling,
            distance: 0.0,
        });
    }
    let proj = project_onto_moment(s, &(x / scaling), options)?;
    Ok(ConeVerdict {
        member: proj.distance <= MEMBERSHIP_DISTANCE,
        scaling,
        distance: proj.distance,
    })
}

/// Checks `Δ(ρ) = D² Δ'(ρ)` for random states, where `Δ'` uses the rank-one
/// tuple `(v^1 ⊗ v^1, …, v^n ⊗ v^n)` and `D = diag(v^i_i)`. Returns the
/// largest coordinate residual.
pub fn scaling_relation_check(s: &Subspace, samples: usize, seed: u64) -> Result<f64> {
    let gen = s.is_generic(crate::subspace::DEFAULT_GENERIC_TOL);
    if !gen.generic {
        return Err(Error::NotGeneric {
            indices: gen.offending,
        });
    }
    let n = s.ambient_dim();
    let pvs: Vec<_> = (0..n)
        .map(|j| s.principal_vector(j))
        .collect::<Result<_>>()?;
    let rank_one = JointNumericalRange::new(
        pvs.iter()
            .map(|p| HermitianMatrix::symmetrized(outer(&p.vector)))
            .collect(),
    )?;
    let mut rng = rng_from_seed(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let rho = crate::random::density(n, &mut rng);
        let direct = delta_map(s, &rho)?.x;
        let reduced = rank_one.point(&rho)?;
        for i in 0..n {
            let scaled = pvs[i].top * pvs[i].top * reduced[i];
            worst = worst.max((direct[i] - scaled).abs());
        }
    }
    Ok(worst)
}

/// Points `Δ(x ⊗ x)` of the classical joint numerical range for random unit `x ∈ C^n`.
pub fn sample_classical(s: &Subspace, count: usize, seed: u64) -> Vec<DVector<f64>> {
    let mut rng = rng_from_seed(seed);
    let p = s.projector().as_matrix();
    (0..count)
        .map(|_| {
            let x = unit_vector(s.ambient_dim(), &mut rng);
            (p * x).map(|z| z.norm_sqr())
        })
        .collect()
}
