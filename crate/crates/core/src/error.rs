use thiserror::Error;

/// Errors raised by the moment-set, joint-numerical-range and minimality routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not hermitian: max |A - A*| entry is {max_asymmetry:e}")]
    NotHermitian { max_asymmetry: f64 },

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("columns are not orthonormal: max |Q*Q - I| entry is {deviation:e}")]
    NotOrthonormal { deviation: f64 },

    #[error("empty input")]
    EmptyInput,

    #[error("the given vectors span the zero subspace")]
    ZeroSpan,

    #[error("subspace is not generic at coordinate {index}: P_jj = {diagonal:e}")]
    NotGenericAtCoordinate { index: usize, diagonal: f64 },

    #[error("subspace is not generic; missing coordinates {indices:?}")]
    NotGeneric { indices: Vec<usize> },

    #[error("principal vectors {j} and {k} are linearly dependent (v^j_j - |v^k_j| = {gap:e})")]
    DegenerateCurve { j: usize, k: usize, gap: f64 },

    #[error("vector is not a unit vector of the subspace (residual {residual:e})")]
    NotInSubspace { residual: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("coordinate {index} is negative ({value:e})")]
    NegativeCoordinate { index: usize, value: f64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rejected: {0}")]
    Rejected(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
