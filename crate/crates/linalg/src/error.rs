use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric (asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("invalid signature ({p},{q}): need p >= q >= 0 and p + q >= 1")]
    InvalidSignature { p: usize, q: usize },
    #[error("columns are rank deficient (rank {rank} < {expected})")]
    RankDeficient { rank: usize, expected: usize },
    #[error("columns are not orthonormal (defect {defect:.3e})")]
    NotOrthonormal { defect: f64 },
    #[error("zero vector where a line was expected")]
    ZeroVector,
    #[error("expected a frame with {expected} columns, found {found}")]
    WrongRank { expected: usize, found: usize },
    #[error("subspace is not isotropic (residual {residual:.3e})")]
    NotIsotropic { residual: f64 },
    #[error("malformed matrix data: {0}")]
    Malformed(String),
}
