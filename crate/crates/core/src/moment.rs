//! The moment set `m_S = conv{|s|² : s ∈ S, ‖s‖ = 1}`.
//!
//! `m_S` is never stored as a polytope. It is accessed through sampled points
//! and through its exact support function: for a real direction `c`,
//! `max_{p ∈ m_S} ⟨c, p⟩` is the largest eigenvalue of the `r × r`
//! compression `Q* diag(c) Q`.
//!
//! The second half of the module implements the extremal curves
//! `v^{j⤳k}(t) = cos t · v^j + sin t · w̃^{jk}` joining two principal vectors,
//! the ellipse traced by their `(j, k)` moduli, and the companion checks.

use std::f64::consts::FRAC_PI_2;

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::linalg::{
    diag_matrix, inner, real, squared_moduli, unit_phase, CVector, HermitianMatrix, C64,
};
use crate::random::{rng_from_seed, unit_vector};
use crate::subspace::{PrincipalVector, Subspace};

/// Maximum `‖P s − s‖` for a vector to count as a member of `S`.
pub const MEMBERSHIP_TOL: f64 = 1e-10;
/// Accepted deviation of `‖s‖` from 1.
pub const UNIT_TOL: f64 = 1e-10;
/// `v^j` and `v^k` are treated as independent when `v^j_j − |v^k_j|` exceeds this.
pub const INDEPENDENCE_TOL: f64 = 1e-9;
/// `|v^j_k|` at or below this value puts a curve in the orthogonal (segment) case.
pub const ORTHOGONAL_TOL: f64 = 1e-12;
/// Relative spectral gap below which a support maximizer is reported as non-unique.
pub const SIMPLE_GAP_TOL: f64 = 1e-9;

const PARAM_SLACK: f64 = 1e-12;

/// A point `|v|²` of the moment set: non-negative coordinates summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentPoint(pub DVector<f64>);

impl MomentPoint {
    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn sum(&self) -> f64 {
        self.0.sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_unit_member(s: &Subspace, v: &CVector) -> Result<()> {
    if v.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: v.len(),
        });
    }
    let residual = s.residual(v).max((v.norm() - 1.0).abs());
    if residual > MEMBERSHIP_TOL.max(UNIT_TOL) {
        return Err(Error::NotInSubspace { residual });
    }
    Ok(())
}

/// `|s|²` for a unit vector `s ∈ S`.
pub fn moment_of_vector(s: &Subspace, v: &CVector) -> Result<MomentPoint> {
    check_unit_member(s, v)?;
    Ok(MomentPoint(squared_moduli(v)))
}

/// `count` points `|Q z|²` with `z` uniform on the unit sphere of `C^r`.
///
/// Deterministic for a given seed.
pub fn sample_moment(s: &Subspace, count: usize, seed: u64) -> Vec<MomentPoint> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| MomentPoint(squared_moduli(&(s.basis() * unit_vector(s.dim(), &mut rng)))))
        .collect()
}

/// Support function value of `m_S` in a direction, with a maximizer.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportPoint {
    /// `max_{s ∈ S, ‖s‖=1} Σ c_i |s_i|²`.
    pub value: f64,
    /// Unit vector of `S` attaining the value.
    pub maximizer: CVector,
    /// `|maximizer|²`, a boundary point of `m_S`.
    pub point: MomentPoint,
    /// Gap between the two largest eigenvalues of the compression
    /// (`+∞` when `dim S = 1`).
    pub spectral_gap: f64,
}

impl SupportPoint {
    /// Whether the maximizer is unique up to phase, i.e. the face of `m_S`
    /// exposed by the direction is the single point `|maximizer|²`.
    pub fn is_simple(&self, scale: f64) -> bool {
        self.spectral_gap > SIMPLE_GAP_TOL * scale.max(1.0)
    }
}

/// `Q* diag(c) Q`.
pub(crate) fn compression(s: &Subspace, c: &DVector<f64>) -> HermitianMatrix {
    let q = s.basis();
    HermitianMatrix::symmetrized(q.adjoint() * diag_matrix(c) * q)
}

fn check_direction(s: &Subspace, c: &DVector<f64>) -> Result<()> {
    if c.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: c.len(),
        });
    }
    if c.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Exact support function `h_{m_S}(c)` via the top eigenpair of the compression.
pub fn support_moment(s: &Subspace, c: &DVector<f64>) -> Result<SupportPoint> {
    check_direction(s, c)?;
    let e = compression(s, c).eig();
    let r = e.eigenvalues.len();
    let value = e.eigenvalues[r - 1];
    let spectral_gap = if r > 1 {
        value - e.eigenvalues[r - 2]
    } else {
        f64::INFINITY
    };
    let mut maximizer = s.basis() * e.eigenvectors.column(r - 1);
    maximizer /= real(maximizer.norm());
    let point = MomentPoint(squared_moduli(&maximizer));
    Ok(SupportPoint {
        value,
        maximizer,
        point,
        spectral_gap,
    })
}

/// Lower support value `min_{p ∈ m_S} ⟨c, p⟩ = −h_{m_S}(−c)`.
pub fn lower_support_moment(s: &Subspace, c: &DVector<f64>) -> Result<f64> {
    check_direction(s, c)?;
    Ok(compression(s, c).eig().min())
}

/// How strongly `|v^j|²` is certified as a boundary point of `m_S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremality {
    /// The direction `e_j` exposes exactly this point.
    Exposed,
    /// The direction `e_j` supports a face of positive dimension containing it.
    Boundary,
}

/// Certifies `|v^j|²` through the supporting direction `e_j`.
pub fn principal_point_extremality(s: &Subspace, j: usize) -> Result<Extremality> {
    s.principal_vector(j)?;
    let mut c = DVector::zeros(s.ambient_dim());
    c[j] = 1.0;
    let sp = support_moment(s, &c)?;
    Ok(if sp.is_simple(1.0) {
        Extremality::Exposed
    } else {
        Extremality::Boundary
    })
}

/// A point `v^{j⤳k}(t)` of an extremal curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub j: usize,
    pub k: usize,
    pub t: f64,
    pub vector: CVector,
    pub moment: MomentPoint,
}

/// Projection `t ↦ cos t · a + sin t · b` of the curve moduli `(|v_j|, |v_k|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseParams {
    /// `(v^j_j, |v^j_k|)`.
    pub a: [f64; 2],
    /// `(0, sqrt((v^k_k)² − |v^j_k|²))`.
    pub b: [f64; 2],
}

impl EllipseParams {
    pub fn at(&self, t: f64) -> [f64; 2] {
        let (ct, st) = (t.cos(), t.sin());
        [ct * self.a[0] + st * self.b[0], ct * self.a[1] + st * self.b[1]]
    }

    /// Squared moduli `(|v_j|², |v_k|²)` along the curve.
    pub fn squared_at(&self, t: f64) -> [f64; 2] {
        let [x, y] = self.at(t);
        [x * x, y * y]
    }

    /// The orthogonal case `v^j ⊥ v^k`, where the squared curve is a straight segment.
    pub fn is_segment(&self) -> bool {
        self.a[1] <= ORTHOGONAL_TOL
    }
}

/// Everything needed to evaluate `v^{j⤳k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveFrame {
    pub j: usize,
    pub k: usize,
    pub vj: PrincipalVector,
    pub vk: PrincipalVector,
    /// `e^{i arg v^j_k} (v^k − ⟨v^k, v^j⟩ v^j) / ‖·‖`, a unit vector orthogonal to `v^j`.
    pub w_tilde: CVector,
    /// `e^{i arg v^j_k}`.
    pub phase: C64,
    /// `arccos(|v^j_k| / v^k_k)`, where the curve passes through `e^{i arg v^j_k} v^k`.
    pub t0: f64,
}

impl CurveFrame {
    pub fn new(s: &Subspace, j: usize, k: usize) -> Result<Self> {
        if j == k {
            return Err(Error::InvalidParameter(format!(
                "curve endpoints must differ (j = k = {j})"
            )));
        }
        let vj = s.principal_vector(j)?;
        let vk = s.principal_vector(k)?;
        let gap = vj.top - vk.vector[j].norm();
        if gap <= INDEPENDENCE_TOL {
            return Err(Error::DegenerateCurve { j, k, gap });
        }
        let phase = unit_phase(vj.vector[k]);
        let mut residual = &vk.vector - &vj.vector * inner(&vk.vector, &vj.vector);
        // second pass keeps w̃ ⊥ v^j to rounding when v^k is close to v^j
        residual -= &vj.vector * inner(&residual, &vj.vector);
        let norm = residual.norm();
        let w_tilde = residual * (phase / norm);
        let ratio = (vj.vector[k].norm() / vk.top).min(1.0);
        let t0 = ratio.acos();
        Ok(Self {
            j,
            k,
            vj,
            vk,
            w_tilde,
            phase,
            t0,
        })
    }

    fn check_t(&self, t: f64, upper: f64) -> Result<f64> {
        if !t.is_finite() || t < -PARAM_SLACK || t > upper + PARAM_SLACK {
            return Err(Error::InvalidParameter(format!(
                "t = {t} outside [0, {upper}]"
            )));
        }
        Ok(t.clamp(0.0, upper))
    }

    pub fn point(&self, t: f64) -> Result<CurveSample> {
        let t = self.check_t(t, FRAC_PI_2)?;
        let vector = &self.vj.vector * real(t.cos()) + &self.w_tilde * real(t.sin());
        let moment = MomentPoint(squared_moduli(&vector));
        Ok(CurveSample {
            j: self.j,
            k: self.k,
            t,
            vector,
            moment,
        })
    }

    pub fn ellipse(&self) -> EllipseParams {
        let vjk = self.vj.vector[self.k].norm();
        let b = (self.vk.top * self.vk.top - vjk * vjk).max(0.0).sqrt();
        EllipseParams {
            a: [self.vj.top, vjk],
            b: [0.0, b],
        }
    }

    pub fn is_orthogonal_case(&self) -> bool {
        self.vj.vector[self.k].norm() <= ORTHOGONAL_TOL
    }

    /// Unit direction supported on `{j, k}` that is normal to the squared
    /// curve `(|v_j(t)|², |v_k(t)|²)` and points away from `m_S`.
    pub fn supporting_direction(&self, t: f64) -> Result<DVector<f64>> {
        let t = self.check_t(t, FRAC_PI_2)?;
        let e = self.ellipse();
        let (ct, st) = (t.cos(), t.sin());
        let aj2 = e.a[0] * e.a[0];
        let dx = -2.0 * aj2 * ct * st;
        let y = ct * e.a[1] + st * e.b[1];
        let dy = 2.0 * y * (-st * e.a[1] + ct * e.b[1]);
        let (mut cj, mut ck) = (dy, -dx);
        let norm = cj.hypot(ck);
        if norm == 0.0 {
            // t = 0 with v^j ⊥ v^k: e_j still supports |v^j|²
            cj = 1.0;
            ck = 0.0;
        } else {
            cj /= norm;
            ck /= norm;
        }
        let mut c = DVector::zeros(self.vj.vector.len());
        c[self.j] = cj;
        c[self.k] = ck;
        Ok(c)
    }
}

/// `v^{j⤳k}(t)` for `t ∈ [0, π/2]`.
pub fn curve_point(s: &Subspace, j: usize, k: usize, t: f64) -> Result<CurveSample> {
    CurveFrame::new(s, j, k)?.point(t)
}

pub fn ellipse_projection(s: &Subspace, j: usize, k: usize) -> Result<EllipseParams> {
    Ok(CurveFrame::new(s, j, k)?.ellipse())
}

/// Parameter at which the curve dominates a unit vector `x ∈ S` in
/// coordinates `j` and `k`, together with the checked relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domination {
    pub t: f64,
    /// `| |x_j| − |v_j(t)| |`.
    pub equality_residual: f64,
    /// `|v_k(t)| − |x_k|`, non-negative up to rounding.
    pub slack: f64,
}

/// Slack allowed on `|x_k| ≤ |v_k(t_x)|`.
pub const DOMINATION_SLACK: f64 = 1e-12;
/// Tolerance on `|x_j| = |v_j(t_x)|`.
pub const DOMINATION_EQ_TOL: f64 = 1e-10;

impl CurveFrame {
    /// `t_x = arccos |⟨x, v^j⟩|`, evaluated as `atan2(‖x − a v^j‖, |a|)` for accuracy near 0.
    pub fn dominating_t(&self, s: &Subspace, x: &CVector) -> Result<Domination> {
        check_unit_member(s, x)?;
        let a = inner(x, &self.vj.vector);
        let rest = (x - &self.vj.vector * a).norm();
        let t = rest.atan2(a.norm());
        let curve = self.point(t.min(FRAC_PI_2))?;
        let equality_residual = (x[self.j].norm() - curve.vector[self.j].norm()).abs();
        let slack = curve.vector[self.k].norm() - x[self.k].norm();
        if equality_residual > DOMINATION_EQ_TOL || slack < -DOMINATION_SLACK {
            return Err(Error::NumericalInconsistency(format!(
                "domination at t = {t} fails: |x_j| residual {equality_residual:e}, k slack {slack:e}"
            )));
        }
        Ok(Domination {
            t,
            equality_residual,
            slack,
        })
    }

    /// `‖v^{j⤳k}(t) − e^{i arg v^j_k} v^{k⤳j}(t0 − t)‖` for `t ∈ [0, t0]`.
    pub fn overlap_residual(&self, s: &Subspace, t: f64) -> Result<f64> {
        let t = self.check_t(t, self.t0)?;
        let reverse = CurveFrame::new(s, self.k, self.j)?;
        let forward = self.point(t)?;
        let backward = reverse.point((self.t0 - t).max(0.0))?;
        Ok((forward.vector - backward.vector * self.phase).norm())
    }
}

pub fn dominating_t(s: &Subspace, j: usize, k: usize, x: &CVector) -> Result<Domination> {
    CurveFrame::new(s, j, k)?.dominating_t(s, x)
}

pub fn curve_overlap_check(s: &Subspace, j: usize, k: usize, t: f64) -> Result<f64> {
    CurveFrame::new(s, j, k)?.overlap_residual(s, t)
}

/// Euclidean distance from a point of the plane to the segment `[(1,0), (0,1)]`.
pub fn distance_to_unit_segment(p: [f64; 2]) -> f64 {
    // the segment lies on x + y = 1 with endpoints e_1, e_2
    let s = ((p[0] - p[1] + 1.0) / 2.0).clamp(0.0, 1.0);
    let q = [s, 1.0 - s];
    (p[0] - q[0]).hypot(p[1] - q[1])
}
