//! Subspaces of `C^n` given by an orthonormal basis and their projector,
//! principal standard vectors `v^j = P e_j / ‖P e_j‖`, and the centroid
//! `diag(P)/r` of the moment set.
//!
//! Coordinates are 0-based throughout the library.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eig, orthonormality_defect, orthonormalize, projector, real, CMatrix, CVector,
    HermitianMatrix, ORTHONORMAL_TOL,
};

/// Default threshold on `P_jj` below which coordinate `j` counts as missing.
pub const DEFAULT_GENERIC_TOL: f64 = 1e-10;

/// Tolerance for the orthogonality and nesting hypotheses of the centroid identities.
pub const HYPOTHESIS_TOL: f64 = 1e-10;

/// Eigenvalue threshold of `(P_S + P_V)/2` used to detect `S ∩ V`.
const INTERSECTION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    basis: CMatrix,
    projector: HermitianMatrix,
}

impl Subspace {
    /// Span of arbitrary vectors; the dimension is the numerical rank.
    pub fn from_spanning(vectors: &[CVector]) -> Result<Self> {
        let q = orthonormalize(vectors)?;
        if q.ncols() == 0 {
            return Err(Error::ZeroSpan);
        }
        Self::from_orthonormal(q)
    }

    /// Wraps a matrix whose columns are already orthonormal.
    pub fn from_orthonormal(basis: CMatrix) -> Result<Self> {
        if basis.ncols() == 0 {
            return Err(Error::ZeroSpan);
        }
        let projector = projector(&basis)?;
        Ok(Self { basis, projector })
    }

    /// The whole space `C^n` with the standard basis.
    pub fn whole(n: usize) -> Self {
        Self::from_orthonormal(CMatrix::identity(n, n)).expect("identity is orthonormal")
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_whole_space(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// `n × r` matrix with orthonormal columns spanning the subspace.
    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn projector(&self) -> &HermitianMatrix {
        &self.projector
    }

    pub fn basis_vectors(&self) -> Vec<CVector> {
        self.basis.column_iter().map(|c| c.into_owned()).collect()
    }

    /// `‖P v − v‖`.
    pub fn residual(&self, v: &CVector) -> f64 {
        (self.projector.as_matrix() * v - v).norm()
    }

    pub fn contains(&self, v: &CVector, tol: f64) -> bool {
        self.residual(v) <= tol
    }

    /// Largest entry of `|Q_S* Q_V|`; zero iff the subspaces are orthogonal.
    pub fn overlap(&self, other: &Subspace) -> f64 {
        (self.basis.adjoint() * &other.basis)
            .iter()
            .fold(0.0_f64, |acc, z| acc.max(z.norm()))
    }

    pub fn is_orthogonal_to(&self, other: &Subspace, tol: f64) -> bool {
        self.overlap(other) <= tol
    }

    /// `‖(I − P_S) Q_D‖` for a candidate subspace `D ⊂ S`.
    pub fn containment_defect(&self, inner: &Subspace) -> f64 {
        let n = self.ambient_dim();
        let comp = CMatrix::identity(n, n) - self.projector.as_matrix();
        crate::linalg::spectral_norm(&(comp * &inner.basis))
    }

    pub fn orthogonal_complement(&self) -> Result<Subspace> {
        let e = hermitian_eig(&self.projector);
        let cols = e.select(|l| l < 0.5);
        if cols.is_empty() {
            return Err(Error::ZeroSpan);
        }
        Subspace::from_orthonormal(CMatrix::from_columns(&cols))
    }

    /// `S + V`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_spanning(&vs)
    }

    /// `S ∩ V`, or `None` when it is `{0}`.
    pub fn intersection(&self, other: &Subspace) -> Option<Subspace> {
        let mean = HermitianMatrix::symmetrized(
            (self.projector.as_matrix() + other.projector.as_matrix()) * real(0.5),
        );
        let cols = hermitian_eig(&mean).select(|l| l > 1.0 - INTERSECTION_TOL);
        if cols.is_empty() {
            None
        } else {
            Subspace::from_orthonormal(CMatrix::from_columns(&cols)).ok()
        }
    }

    /// `S ⊖ D = S ∩ D^⊥`, or `None` when it is `{0}`.
    pub fn ominus(&self, d: &Subspace) -> Option<Subspace> {
        let n = self.ambient_dim();
        let comp = CMatrix::identity(n, n) - d.projector.as_matrix();
        let cols: Vec<CVector> = (comp * &self.basis)
            .column_iter()
            .map(|c| c.into_owned())
            .filter(|c| c.norm() > crate::linalg::RANK_TOL)
            .collect();
        if cols.is_empty() {
            return None;
        }
        Subspace::from_spanning(&cols).ok()
    }

    /// Genericity test: every diagonal entry of `P` above `tol`.
    pub fn is_generic(&self, tol: f64) -> Genericity {
        let offending: Vec<usize> = (0..self.ambient_dim())
            .filter(|&j| self.projector.as_matrix()[(j, j)].re <= tol)
            .collect();
        Genericity {
            generic: offending.is_empty(),
            offending,
        }
    }

    pub fn principal_vector(&self, j: usize) -> Result<PrincipalVector> {
        self.principal_vector_tol(j, DEFAULT_GENERIC_TOL)
    }

    /// `v^j = P e_j / ‖P e_j‖`, defined when `P_jj > tol`.
    pub fn principal_vector_tol(&self, j: usize, tol: f64) -> Result<PrincipalVector> {
        let n = self.ambient_dim();
        if j >= n {
            return Err(Error::InvalidParameter(format!(
                "coordinate {j} out of range for ambient dimension {n}"
            )));
        }
        let p = self.projector.as_matrix();
        let diagonal = p[(j, j)].re;
        if diagonal <= tol {
            return Err(Error::NotGenericAtCoordinate { index: j, diagonal });
        }
        let column = p.column(j).into_owned();
        let norm = column.norm();
        let mut vector = column / real(norm);
        // v^j_j = P_jj / ‖P e_j‖ is real and positive; drop rounding noise.
        vector[j].im = 0.0;
        let top = vector[j].re;
        Ok(PrincipalVector {
            index: j,
            vector,
            top,
        })
    }

    /// All principal vectors, `None` where the coordinate is missing.
    pub fn principal_vectors(&self, tol: f64) -> Vec<Option<PrincipalVector>> {
        (0..self.ambient_dim())
            .map(|j| self.principal_vector_tol(j, tol).ok())
            .collect()
    }

    pub fn centroid(&self) -> Centroid {
        Centroid(self.projector.diagonal() / self.dim() as f64)
    }
}

/// Outcome of the genericity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genericity {
    pub generic: bool,
    /// Coordinates `j` with `P_jj` at or below the tolerance.
    pub offending: Vec<usize>,
}

/// Principal standard vector `v^j`: the unit vector of `S` closest in angle
/// to the `j`-th axis, with `v^j_j` real positive.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalVector {
    pub index: usize,
    pub vector: CVector,
    /// `v^j_j = ‖P e_j‖ = sqrt(P_jj)`.
    pub top: f64,
}

/// Centroid `c(m_S) = diag(P_S)/dim S`.
#[derive(Debug, Clone, PartialEq)]
pub struct Centroid(pub DVector<f64>);

impl Centroid {
    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }
}

/// One of the linear identities satisfied by centroids of related subspaces.
#[derive(Debug, Clone, Copy)]
pub enum CentroidIdentity<'a> {
    /// `c(S ⊕ V) = (r c(S) + k c(V)) / (r + k)` for `S ⊥ V`.
    DirectSum(&'a Subspace, &'a Subspace),
    /// `c(S^⊥) = ((1,…,1) − r c(S)) / (n − r)`.
    Complement(&'a Subspace),
    /// `c(S ⊖ D) = (r c(S) − d c(D)) / (r − d)` for `D ⊊ S`.
    Difference { outer: &'a Subspace, inner: &'a Subspace },
    /// `c(S + V) = (r c(S) + k c(V) − d c(D)) / (r + k − d)` with `D = S ∩ V`,
    /// when `S ⊖ D ⊥ V ⊖ D`.
    SharedSum(&'a Subspace, &'a Subspace),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentroidCheck {
    /// Centroid of the derived subspace, computed from its own projector.
    pub direct: DVector<f64>,
    /// Right-hand side assembled from the constituent centroids.
    pub formula: DVector<f64>,
    /// `max_i |direct_i − formula_i|`.
    pub residual: f64,
}

fn check(direct: DVector<f64>, formula: DVector<f64>) -> CentroidCheck {
    let residual = (&direct - &formula).amax();
    CentroidCheck {
        direct,
        formula,
        residual,
    }
}

/// Evaluates one centroid identity, computing the derived subspace
/// independently and comparing its centroid with the closed-form combination.
pub fn centroid_algebra_check(identity: CentroidIdentity<'_>) -> Result<CentroidCheck> {
    match identity {
        CentroidIdentity::DirectSum(s, v) => {
            let overlap = s.overlap(v);
            if overlap > HYPOTHESIS_TOL {
                return Err(Error::HypothesisViolated(format!(
                    "subspaces are not orthogonal (max |<s,v>| = {overlap:e})"
                )));
            }
            let (r, k) = (s.dim() as f64, v.dim() as f64);
            let direct = s.sum(v)?.centroid().0;
            let formula = (s.centroid().0 * r + v.centroid().0 * k) / (r + k);
            Ok(check(direct, formula))
        }
        CentroidIdentity::Complement(s) => {
            if s.is_whole_space() {
                return Err(Error::HypothesisViolated(
                    "the whole space has no non-trivial complement".into(),
                ));
            }
            let n = s.ambient_dim() as f64;
            let r = s.dim() as f64;
            let direct = s.orthogonal_complement()?.centroid().0;
            let ones = DVector::from_element(s.ambient_dim(), 1.0);
            let formula = (ones - s.centroid().0 * r) / (n - r);
            Ok(check(direct, formula))
        }
        CentroidIdentity::Difference { outer, inner } => {
            let defect = outer.containment_defect(inner);
            if defect > HYPOTHESIS_TOL {
                return Err(Error::HypothesisViolated(format!(
                    "inner subspace is not contained in outer (defect {defect:e})"
                )));
            }
            if inner.dim() >= outer.dim() {
                return Err(Error::HypothesisViolated(
                    "inner subspace must be a proper subspace".into(),
                ));
            }
            let (r, d) = (outer.dim() as f64, inner.dim() as f64);
            let diff = outer.ominus(inner).ok_or(Error::ZeroSpan)?;
            let formula = (outer.centroid().0 * r - inner.centroid().0 * d) / (r - d);
            Ok(check(diff.centroid().0, formula))
        }
        CentroidIdentity::SharedSum(s, v) => {
            let shared = s.intersection(v);
            let (rest_s, rest_v) = match &shared {
                Some(d) => (s.ominus(d), v.ominus(d)),
                None => (Some(s.clone()), Some(v.clone())),
            };
            if let (Some(a), Some(b)) = (&rest_s, &rest_v) {
                let overlap = a.overlap(b);
                if overlap > HYPOTHESIS_TOL {
                    return Err(Error::HypothesisViolated(format!(
                        "S ⊖ D and V ⊖ D are not orthogonal (max |<s,v>| = {overlap:e})"
                    )));
                }
            }
            let (r, k) = (s.dim() as f64, v.dim() as f64);
            let n = s.ambient_dim();
            let (d, cd) = match &shared {
                Some(d) => (d.dim() as f64, d.centroid().0),
                None => (0.0, DVector::zeros(n)),
            };
            let direct = s.sum(v)?.centroid().0;
            let formula = (s.centroid().0 * r + v.centroid().0 * k - cd * d) / (r + k - d);
            Ok(check(direct, formula))
        }
    }
}

/// Sanity check used by callers that build subspaces from raw bases.
pub fn is_orthonormal(q: &CMatrix) -> bool {
    orthonormality_defect(q) <= ORTHONORMAL_TOL
}
