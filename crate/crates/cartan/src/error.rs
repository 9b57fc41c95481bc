use ano_linalg::LinalgError;
use ano_roots::RootsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CartanError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("matrix is numerically singular (condition estimate {condition:e})")]
    Singular { condition: f64 },
    #[error("matrix does not preserve the form (defect {defect:e})")]
    NotPreserving { defect: f64 },
    #[error("gap at α{root} is {value:e}, not above the tolerance; the flag is ill-defined")]
    GapTooSmall { root: usize, value: f64 },
    #[error("root system {system} is incompatible with a {group} projection of length {len}")]
    Incompatible { system: String, group: String, len: usize },
    #[error("expected a {expected}x{expected} matrix, found {rows}x{cols}")]
    Shape { expected: usize, rows: usize, cols: usize },
    #[error("exterior power degree {degree} out of range for dimension {dim}")]
    Degree { degree: usize, dim: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}
