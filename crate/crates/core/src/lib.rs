//! Numerical toolkit for the moment set `m_S` of a complex subspace
//! `S ⊂ C^n`, its principal vectors and extremal curves, the joint numerical
//! range of the compressed coordinate projections, and feasibility
//! certificates for minimal hermitian matrices.
//!
//! Indices are 0-based throughout the library.

pub mod cli;
pub mod error;
pub mod jnr;
pub mod linalg;
pub mod minimality;
pub mod moment;
pub mod random;
pub mod subspace;

pub use error::{Error, Result};
pub use jnr::{DensityMatrix, JnrPoint, JointNumericalRange};
pub use linalg::{CMatrix, CVector, EigenDecomposition, HermitianMatrix, C64};
pub use minimality::{
    FwOptions, IntersectionCertificate, IntersectionStatus, MinimalMatrixParts, MinimalityReport, Verdict,
};
pub use moment::{CurveFrame, CurveSample, EllipseParams, MomentPoint};
pub use subspace::{PrincipalVector, Subspace};
