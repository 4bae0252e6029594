//! Moment intersection, minimality of hermitian matrices, and Hausdorff
//! estimates between moments.
//!
//! All feasibility problems here are instances of
//!
//! ```text
//! minimize ‖Σ_b σ_b diag(Q_b M_b Q_b*) − p‖²   over density matrices M_b
//! ```
//!
//! solved by Frank-Wolfe with exact line search. The linear oracle of each
//! block is an extreme eigenvector of `Q_b* diag(z) Q_b`, and the same
//! eigenvalues give a certified lower bound on the optimal distance. A few
//! Levenberg-Marquardt sweeps on a factorization `M = Z Z* / ‖Z‖²` are
//! interleaved to finish off zero-residual problems quickly.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jnr::DensityMatrix;
use crate::linalg::{
    c, diag_matrix, outer, real, real_diagonal, spectral_norm, CMatrix, HermitianMatrix,
};
use crate::moment::{lower_support_moment, support_moment, MomentPoint};
use crate::subspace::{Subspace, HYPOTHESIS_TOL};

/// Smallest separation margin accepted as a disjointness certificate.
pub const SEPARATION_MARGIN: f64 = 1e-9;
/// Slack on the coordinate bound of common points of orthogonal pairs.
pub const COORDINATE_SLACK: f64 = 1e-9;
/// Default relative eigenspace threshold of [`check_minimal`].
pub const DEFAULT_EIG_TOL: f64 = 1e-8;

const FIRST_POLISH: usize = 64;
const POLISH_SWEEPS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct FwOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Keep the objective after every iteration.
    pub record_history: bool,
    /// Interleave factorized Levenberg-Marquardt sweeps.
    pub polish: bool,
}

impl Default for FwOptions {
    fn default() -> Self {
        Self {
            tol: 1e-7,
            max_iter: 50_000,
            record_history: false,
            polish: true,
        }
    }
}

impl FwOptions {
    fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidParameter("max_iter must be positive".into()));
        }
        Ok(())
    }
}

struct Block<'a> {
    q: &'a CMatrix,
    sign: f64,
    m: CMatrix,
    x: DVector<f64>,
}

impl<'a> Block<'a> {
    fn start(s: &'a Subspace, sign: f64) -> Self {
        let r = s.dim();
        let m = CMatrix::identity(r, r) * real(1.0 / r as f64);
        let x = s.centroid().0;
        Self { q: s.basis(), sign, m, x }
    }

    fn image(q: &CMatrix, m: &CMatrix) -> DVector<f64> {
        real_diagonal(&(q * m * q.adjoint()))
    }

    fn state(&self) -> DensityMatrix {
        let y = self.q * &self.m * self.q.adjoint();
        DensityMatrix::from_hermitian(HermitianMatrix::symmetrized(y))
            .expect("iterates stay in the density set")
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Project,
    Feasibility,
}

struct FwOutcome<'a> {
    blocks: Vec<Block<'a>>,
    distance: f64,
    lower_bound: f64,
    /// Residual direction that produced `lower_bound`.
    bound_direction: Option<DVector<f64>>,
    iterations: usize,
    converged: bool,
    history: Vec<f64>,
}

fn combined(blocks: &[Block<'_>], p: &DVector<f64>) -> DVector<f64> {
    let mut z = -p.clone();
    for b in blocks {
        z += &b.x * b.sign;
    }
    z
}

fn fw_solve<'a>(mut blocks: Vec<Block<'a>>, p: &DVector<f64>, mode: Mode, opts: &FwOptions) -> FwOutcome<'a> {
    let mut lower_bound = f64::NEG_INFINITY;
    let mut bound_direction = None;
    let mut history = Vec::new();
    let mut next_polish = FIRST_POLISH;
    let mut converged = false;
    let mut iterations = 0;
    let mut z = combined(&blocks, p);

    while iterations < opts.max_iter {
        let d = z.norm();
        if opts.record_history {
            history.push(d * d);
        }
        if d <= opts.tol {
            converged = true;
            break;
        }
        let mut atoms = Vec::with_capacity(blocks.len());
        let mut floor = -z.dot(p);
        for b in &blocks {
            let g = &z * b.sign;
            let qg = b.q.adjoint() * diag_matrix(&g) * b.q;
            let (lambda, a) = HermitianMatrix::symmetrized(qg).bottom_eigenpair();
            floor += lambda;
            atoms.push(a);
        }
        let bound = floor / d;
        if bound > lower_bound {
            lower_bound = bound;
            bound_direction = Some(z.clone());
        }
        let done = match mode {
            Mode::Project => d - lower_bound <= opts.tol,
            Mode::Feasibility => lower_bound > SEPARATION_MARGIN,
        };
        if done {
            converged = true;
            break;
        }

        let mut dz = DVector::zeros(z.len());
        let mut targets = Vec::with_capacity(blocks.len());
        for (b, a) in blocks.iter().zip(&atoms) {
            let s = (b.q * a).map(|w| w.norm_sqr());
            dz += (&s - &b.x) * b.sign;
            targets.push(s);
        }
        let num = -z.dot(&dz);
        let den = dz.norm_squared();
        iterations += 1;
        if num <= 0.0 || den == 0.0 {
            // Stationary up to rounding: no descent left along the oracle direction.
            converged = mode == Mode::Project;
            break;
        }
        let gamma = (num / den).min(1.0);
        for ((b, a), s) in blocks.iter_mut().zip(&atoms).zip(targets) {
            b.m = &b.m * real(1.0 - gamma) + outer(a) * real(gamma);
            b.x = &b.x * (1.0 - gamma) + s * gamma;
        }
        z = combined(&blocks, p);

        if opts.polish && iterations == next_polish {
            next_polish *= 8;
            if let Some(polished) = lm_polish(&blocks, p, POLISH_SWEEPS) {
                let before = z.norm_squared();
                let trial = polished.iter().zip(&blocks).map(|(m, b)| b.sign * Block::image(b.q, m)).fold(-p.clone(), |acc, v| acc + v);
                if trial.norm_squared() < before {
                    for (b, m) in blocks.iter_mut().zip(polished) {
                        b.x = Block::image(b.q, &m);
                        b.m = m;
                    }
                    z = combined(&blocks, p);
                }
            }
        }
    }

    let distance = z.norm();
    FwOutcome {
        blocks,
        distance,
        lower_bound: lower_bound.max(0.0).min(distance),
        bound_direction,
        iterations,
        converged,
        history,
    }
}

/// Factor `M = Z Z*` with a floor on the eigenvalues so that no column is dead.
fn factor(m: &CMatrix) -> CMatrix {
    let e = HermitianMatrix::symmetrized(m.clone()).eig();
    let mut z = e.eigenvectors.clone();
    for (j, l) in e.eigenvalues.iter().enumerate() {
        let w = l.max(1e-8).sqrt();
        z.column_mut(j).scale_mut(w);
    }
    z
}

fn params_to_factors(theta: &DVector<f64>, shapes: &[usize]) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(shapes.len());
    let mut off = 0;
    for &r in shapes {
        let z = CMatrix::from_fn(r, r, |i, j| {
            let k = off + 2 * (i + r * j);
            c(theta[k], theta[k + 1])
        });
        off += 2 * r * r;
        out.push(z);
    }
    out
}

fn factors_to_params(zs: &[CMatrix]) -> DVector<f64> {
    let mut v = Vec::new();
    for z in zs {
        for j in 0..z.ncols() {
            for i in 0..z.nrows() {
                v.push(z[(i, j)].re);
                v.push(z[(i, j)].im);
            }
        }
    }
    DVector::from_vec(v)
}

/// Residual and Jacobian of `Σ σ_b diag(Q_b Z_b Z_b* Q_b*) / ‖Z_b‖² − p`.
fn residual_jacobian(blocks: &[Block<'_>], zs: &[CMatrix], p: &DVector<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = p.len();
    let cols: usize = zs.iter().map(|z| 2 * z.len()).sum();
    let mut r = -p.clone();
    let mut jac = DMatrix::zeros(n, cols);
    let mut off = 0;
    for (b, z) in blocks.iter().zip(zs) {
        let rk = z.nrows();
        let w = b.q * z;
        let nu = z.norm_squared();
        let s: DVector<f64> = DVector::from_fn(n, |i, _| w.row(i).iter().map(|x| x.norm_sqr()).sum());
        r += &s * (b.sign / nu);
        for l in 0..rk {
            for m in 0..rk {
                let k = off + 2 * (m + rk * l);
                let zm = z[(m, l)];
                for i in 0..n {
                    let a = w[(i, l)].conj() * b.q[(i, m)];
                    let ds_re = 2.0 * a.re;
                    let ds_im = -2.0 * a.im;
                    jac[(i, k)] = b.sign * (ds_re / nu - s[i] * 2.0 * zm.re / (nu * nu));
                    jac[(i, k + 1)] = b.sign * (ds_im / nu - s[i] * 2.0 * zm.im / (nu * nu));
                }
            }
        }
        off += 2 * rk * rk;
    }
    (r, jac)
}

/// Levenberg-Marquardt on the factorized problem. Returns the polished
/// density blocks (in subspace coordinates) when anything improved.
fn lm_polish(blocks: &[Block<'_>], p: &DVector<f64>, sweeps: usize) -> Option<Vec<CMatrix>> {
    let shapes: Vec<usize> = blocks.iter().map(|b| b.m.nrows()).collect();
    let start: Vec<CMatrix> = blocks.iter().map(|b| factor(&b.m)).collect();
    let mut theta = factors_to_params(&start);
    let (mut r, mut jac) = residual_jacobian(blocks, &start, p);
    let f0 = r.norm_squared();
    let mut f = f0;
    let mut mu = 1e-3;
    for _ in 0..sweeps {
        if f < 1e-32 {
            break;
        }
        let jt = jac.transpose();
        let a = &jt * &jac;
        let g = &jt * &r;
        let scale = a.diagonal().max().max(1e-300);
        let mut accepted = false;
        while mu < 1e10 {
            let mut lhs = a.clone();
            for i in 0..lhs.nrows() {
                lhs[(i, i)] += mu * scale;
            }
            let Some(chol) = lhs.cholesky() else {
                mu *= 4.0;
                continue;
            };
            let step = chol.solve(&(-&g));
            let trial = &theta + step;
            let zs = params_to_factors(&trial, &shapes);
            let (rt, jt2) = residual_jacobian(blocks, &zs, p);
            let ft = rt.norm_squared();
            if ft.is_finite() && ft < f {
                theta = trial;
                r = rt;
                jac = jt2;
                f = ft;
                mu = (mu / 3.0).max(1e-12);
                accepted = true;
                break;
            }
            mu *= 4.0;
        }
        if !accepted {
            break;
        }
    }
    if f >= f0 {
        return None;
    }
    Some(
        params_to_factors(&theta, &shapes)
            .into_iter()
            .map(|z| {
                let nu = z.norm_squared();
                let m = &z * z.adjoint() * real(1.0 / nu);
                HermitianMatrix::symmetrized(m).into_inner()
            })
            .collect(),
    )
}

/// Result of projecting a point onto `m_S`.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    /// `‖Δ(witness) − p‖`, an upper bound on the true distance.
    pub distance: f64,
    /// Certified lower bound on the true distance from the support oracle.
    pub lower_bound: f64,
    pub point: MomentPoint,
    pub witness: DensityMatrix,
    pub iterations: usize,
    pub converged: bool,
    pub history: Vec<f64>,
}

/// Nearest point of `m_S` to `p`, within `opts.tol` of the true distance when converged.
pub fn project_onto_moment(s: &Subspace, p: &DVector<f64>, opts: &FwOptions) -> Result<Projection> {
    opts.validate()?;
    if p.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: p.len(),
        });
    }
    if p.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let out = fw_solve(vec![Block::start(s, 1.0)], p, Mode::Project, opts);
    let b = &out.blocks[0];
    Ok(Projection {
        distance: out.distance,
        lower_bound: out.lower_bound,
        point: MomentPoint(b.x.clone()),
        witness: b.state(),
        iterations: out.iterations,
        converged: out.converged,
        history: out.history,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionStatus {
    Intersect,
    Disjoint,
    Indeterminate,
}

impl IntersectionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Intersect => "INTERSECT",
            Self::Disjoint => "DISJOINT",
            Self::Indeterminate => "INDETERMINATE",
        }
    }
}

/// Witness states `Y ∈ D_V`, `X ∈ D_W` with nearly equal diagonals.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionWitness {
    pub y: DensityMatrix,
    pub x: DensityMatrix,
}

/// Separating direction: `λ_min(Q_V* D_u Q_V) − λ_max(Q_W* D_u Q_W) = margin > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Separation {
    pub direction: DVector<f64>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionCertificate {
    pub status: IntersectionStatus,
    pub witnesses: Option<IntersectionWitness>,
    pub common: Option<MomentPoint>,
    pub separation: Option<Separation>,
    /// Final objective `‖diag(Y) − diag(X)‖²`.
    pub gap: f64,
    /// Best certified lower bound on `dist(m_V, m_W)`.
    pub lower_bound: f64,
    pub iterations: usize,
    pub history: Vec<f64>,
}

/// Replays a separating direction with fresh eigensolves.
pub fn separation_margin(v: &Subspace, w: &Subspace, u: &DVector<f64>) -> Result<f64> {
    Ok(lower_support_moment(v, u)? - support_moment(w, u)?.value)
}

/// Decides whether `m_V ∩ m_W` is empty.
pub fn moments_intersect(v: &Subspace, w: &Subspace, opts: &FwOptions) -> Result<IntersectionCertificate> {
    opts.validate()?;
    if v.ambient_dim() != w.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: v.ambient_dim(),
            found: w.ambient_dim(),
        });
    }
    let n = v.ambient_dim();
    let out = fw_solve(
        vec![Block::start(v, 1.0), Block::start(w, -1.0)],
        &DVector::zeros(n),
        Mode::Feasibility,
        opts,
    );
    let gap = out.distance * out.distance;
    let mut cert = IntersectionCertificate {
        status: IntersectionStatus::Indeterminate,
        witnesses: None,
        common: None,
        separation: None,
        gap,
        lower_bound: out.lower_bound,
        iterations: out.iterations,
        history: out.history,
    };
    if out.distance <= opts.tol {
        let (bv, bw) = (&out.blocks[0], &out.blocks[1]);
        cert.status = IntersectionStatus::Intersect;
        cert.common = Some(MomentPoint((&bv.x + &bw.x) * 0.5));
        cert.witnesses = Some(IntersectionWitness {
            y: bv.state(),
            x: bw.state(),
        });
    } else if let Some(z) = out.bound_direction {
        let u = &z / z.norm();
        let margin = separation_margin(v, w, &u)?;
        if margin > SEPARATION_MARGIN {
            cert.status = IntersectionStatus::Disjoint;
            cert.separation = Some(Separation { direction: u, margin });
        }
    }
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Minimal,
    NotMinimal,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Minimal => "MINIMAL",
            Self::NotMinimal => "NOT_MINIMAL",
            Self::Indeterminate => "INDETERMINATE",
        }
    }

    /// Process exit code of the `minimal-check` command.
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Minimal => 0,
            Self::NotMinimal => 1,
            Self::Indeterminate => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimalityReport {
    pub norm: f64,
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub symmetric: bool,
    /// Eigenspace of the eigenvalues within `eig_tol·‖M‖` of `λ_max`.
    pub v: Subspace,
    /// Eigenspace of the eigenvalues within `eig_tol·‖M‖` of `λ_min`.
    pub w: Subspace,
    /// Distance from each extracted cluster to the rest of the spectrum.
    pub top_gap: Option<f64>,
    pub bottom_gap: Option<f64>,
    /// Only computed when the spectrum is symmetric.
    pub certificate: Option<IntersectionCertificate>,
    pub verdict: Verdict,
}

/// Tests `‖M‖ ≤ ‖M + D‖` for every real diagonal `D`.
pub fn check_minimal(m: &HermitianMatrix, eig_tol: f64, opts: &FwOptions) -> Result<MinimalityReport> {
    if !(eig_tol > 0.0 && eig_tol < 0.5) {
        return Err(Error::InvalidParameter(format!("eig_tol must lie in (0, 0.5), got {eig_tol}")));
    }
    if m.as_matrix().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let e = m.eig();
    let (lambda_min, lambda_max) = (e.min(), e.max());
    let norm = lambda_max.abs().max(lambda_min.abs());
    if norm == 0.0 {
        return Err(Error::InvalidParameter("matrix is zero".into()));
    }
    let thr = eig_tol * norm;
    let symmetric = (lambda_max + lambda_min).abs() <= thr;
    let top = |l: f64| l >= lambda_max - thr;
    let bottom = |l: f64| l <= lambda_min + thr;
    let v = Subspace::from_spanning(&e.select(top))?;
    let w = Subspace::from_spanning(&e.select(bottom))?;
    let top_gap = e.eigenvalues.iter().rev().find(|&&l| !top(l)).map(|l| lambda_max - thr - l);
    let bottom_gap = e.eigenvalues.iter().find(|&&l| !bottom(l)).map(|l| l - lambda_min - thr);

    let (certificate, verdict) = if symmetric {
        let cert = moments_intersect(&v, &w, opts)?;
        let verdict = match cert.status {
            IntersectionStatus::Intersect => Verdict::Minimal,
            IntersectionStatus::Disjoint => Verdict::NotMinimal,
            IntersectionStatus::Indeterminate => Verdict::Indeterminate,
        };
        (Some(cert), verdict)
    } else {
        (None, Verdict::NotMinimal)
    };
    Ok(MinimalityReport {
        norm,
        lambda_max,
        lambda_min,
        symmetric,
        v,
        w,
        top_gap,
        bottom_gap,
        certificate,
        verdict,
    })
}

/// Ingredients of `M = λ(P_V − P_W) + R`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalMatrixParts {
    pub lambda: f64,
    pub v: Subspace,
    pub w: Subspace,
    pub r: HermitianMatrix,
}

/// Assembles `λ(P_V − P_W) + R` after checking every hypothesis, and
/// certifies the result with [`check_minimal`].
pub fn construct_minimal(parts: &MinimalMatrixParts, opts: &FwOptions) -> Result<(HermitianMatrix, MinimalityReport)> {
    let MinimalMatrixParts { lambda, v, w, r } = parts;
    let n = v.ambient_dim();
    if w.ambient_dim() != n || r.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if w.ambient_dim() != n { w.ambient_dim() } else { r.dim() },
        });
    }
    if !(lambda.is_finite() && *lambda > 0.0) {
        return Err(Error::HypothesisViolated(format!("lambda must be positive, got {lambda}")));
    }
    if !v.is_orthogonal_to(w, HYPOTHESIS_TOL) {
        return Err(Error::HypothesisViolated(format!(
            "V and W are not orthogonal (overlap {:e})",
            v.overlap(w)
        )));
    }
    let r_norm = r.spectral_norm();
    let scale = r_norm.max(1.0);
    for (name, s) in [("V", v), ("W", w)] {
        let leak = spectral_norm(&(r.as_matrix() * s.projector().as_matrix()));
        if leak > HYPOTHESIS_TOL * scale {
            return Err(Error::HypothesisViolated(format!("R P_{name} = {leak:e}, expected 0")));
        }
    }
    if r_norm >= lambda - SEPARATION_MARGIN {
        return Err(Error::HypothesisViolated(format!("‖R‖ = {r_norm} is not below lambda = {lambda}")));
    }
    let cert = moments_intersect(v, w, opts)?;
    if cert.status != IntersectionStatus::Intersect {
        return Err(Error::Rejected(format!("moments of V and W: {}", cert.status.as_str())));
    }
    let m = (v.projector().as_matrix() - w.projector().as_matrix()) * real(*lambda) + r.as_matrix();
    let m = HermitianMatrix::symmetrized(m);
    let report = check_minimal(&m, DEFAULT_EIG_TOL, opts)?;
    if report.verdict != Verdict::Minimal || (report.norm - lambda).abs() > 1e-10 * lambda.max(1.0) {
        return Err(Error::NumericalInconsistency(format!(
            "assembled matrix reported {} with norm {}",
            report.verdict.as_str(),
            report.norm
        )));
    }
    Ok((m, report))
}

fn norm_shifted(m: &CMatrix, d: &[f64]) -> f64 {
    let mut a = m.clone();
    for (i, x) in d.iter().enumerate() {
        a[(i, i)] += real(*x);
    }
    a.symmetric_eigenvalues().iter().fold(0.0, |acc: f64, l| acc.max(l.abs()))
}

/// Estimates `dist(M, Diag_n(R)) = min_D ‖M + D‖` by exhaustive grid search
/// over `[−2‖M‖, 2‖M‖]^n` (`grid` points per axis) followed by a pattern
/// search with shrinking steps down to `1e-4`. Every returned value is
/// attained by some `D`, so it never undershoots the true distance.
pub fn brute_force_diag_distance(m: &HermitianMatrix, grid: usize) -> Result<f64> {
    let n = m.dim();
    if n == 0 || n > 4 {
        return Err(Error::InvalidParameter(format!("oracle supports 1 ≤ n ≤ 4, got {n}")));
    }
    if grid < 2 {
        return Err(Error::InvalidParameter("grid needs at least 2 points".into()));
    }
    let a = m.as_matrix();
    let norm = m.spectral_norm();
    if norm == 0.0 {
        return Ok(0.0);
    }
    let lo = -2.0 * norm;
    let step = 4.0 * norm / (grid - 1) as f64;
    let total = grid.pow(n as u32);
    let decode = |mut idx: usize| -> Vec<f64> {
        let mut d = vec![0.0; n];
        for x in d.iter_mut() {
            *x = lo + (idx % grid) as f64 * step;
            idx /= grid;
        }
        d
    };
    let (best_idx, mut best) = (0..total)
        .into_par_iter()
        .map(|i| (i, norm_shifted(a, &decode(i))))
        .reduce(|| (usize::MAX, f64::INFINITY), |x, y| if y.1 < x.1 || (y.1 == x.1 && y.0 < x.0) { y } else { x });
    let mut d = decode(best_idx);
    let zero = norm_shifted(a, &vec![0.0; n]);
    if zero < best {
        best = zero;
        d = vec![0.0; n];
    }

    let dirs: Vec<Vec<f64>> = (0..3usize.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let v = k % 3;
                    k /= 3;
                    v as f64 - 1.0
                })
                .collect::<Vec<f64>>()
        })
        .filter(|v| v.iter().any(|&x| x != 0.0))
        .collect();
    let mut h = step;
    while h >= 1e-4 {
        let mut improved = false;
        for dir in &dirs {
            let trial: Vec<f64> = d.iter().zip(dir).map(|(x, s)| x + h * s).collect();
            let val = norm_shifted(a, &trial);
            if val < best {
                best = val;
                d = trial;
                improved = true;
                break;
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    Ok(best)
}

/// Outcome of the coordinate bound on common points of orthogonal pairs.
#[derive(Debug, Clone, PartialEq)]
pub enum CoordinateBound {
    Holds { max_coordinate: f64 },
    Violated { index: usize, value: f64 },
    NotApplicable(String),
}

/// Every common point of `m_V ∩ m_W` for `V ⊥ W` has coordinates `≤ 1/2`.
pub fn support_coordinate_bound_check(v: &Subspace, w: &Subspace, cert: &IntersectionCertificate) -> CoordinateBound {
    if !v.is_orthogonal_to(w, HYPOTHESIS_TOL) {
        return CoordinateBound::NotApplicable("V and W are not orthogonal".into());
    }
    let common = match (&cert.status, &cert.common) {
        (IntersectionStatus::Intersect, Some(c)) => c,
        _ => return CoordinateBound::NotApplicable(format!("certificate is {}", cert.status.as_str())),
    };
    let (index, value) = common
        .coords()
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, x)| if x > acc.1 { (i, x) } else { acc });
    if value <= 0.5 + COORDINATE_SLACK {
        CoordinateBound::Holds { max_coordinate: value }
    } else {
        CoordinateBound::Violated { index, value }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HausdorffEstimate {
    /// `max_u |h_{m_V}(u) − h_{m_W}(u)|` over the given unit directions.
    pub estimate: f64,
    /// Spectral norm `‖P_V − P_W‖`.
    pub projector_distance: f64,
    /// Frobenius norm `‖P_V − P_W‖_2`.
    pub projector_distance_hs: f64,
    /// `‖P_V − P_W‖ < 1/(2n)`.
    pub hypothesis: bool,
    /// `(2√n + 1)‖P_V − P_W‖`.
    pub bound: f64,
    /// Only meaningful when the hypothesis holds.
    pub bound_holds: Option<bool>,
}

pub fn hausdorff_moments(v: &Subspace, w: &Subspace, directions: &[DVector<f64>]) -> Result<HausdorffEstimate> {
    let n = v.ambient_dim();
    if w.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.ambient_dim(),
        });
    }
    if directions.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = directions.iter().position(|u| (u.norm() - 1.0).abs() > 1e-9) {
        return Err(Error::InvalidParameter(format!("direction {i} is not a unit vector")));
    }
    let estimate = directions
        .par_iter()
        .map(|u| Ok((support_moment(v, u)?.value - support_moment(w, u)?.value).abs()))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let diff = v.projector().as_matrix() - w.projector().as_matrix();
    let projector_distance = spectral_norm(&diff);
    let projector_distance_hs = diff.norm();
    let hypothesis = projector_distance < 1.0 / (2.0 * n as f64);
    let bound = (2.0 * (n as f64).sqrt() + 1.0) * projector_distance;
    Ok(HausdorffEstimate {
        estimate,
        projector_distance,
        projector_distance_hs,
        hypothesis,
        bound,
        bound_holds: hypothesis.then_some(estimate <= bound + 1e-9),
    })
}
