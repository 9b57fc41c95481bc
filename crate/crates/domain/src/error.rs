use thiserror::Error;

#[derive(Debug, Error)]
pub enum DomainError {
    #[error(transparent)]
    Linalg(#[from] ano_linalg::LinalgError),
    #[error(transparent)]
    Cartan(#[from] ano_cartan::CartanError),
    #[error(transparent)]
    Words(#[from] ano_words::WordsError),
    #[error(transparent)]
    Limits(#[from] ano_limits::LimitsError),
    #[error(transparent)]
    Roots(#[from] ano_roots::RootsError),
    #[error("expected a frame with {expected} columns in R^{ambient}, found {found} columns in R^{rows}")]
    Shape { expected: usize, ambient: usize, found: usize, rows: usize },
    #[error("form is positive on the subspace (largest restricted eigenvalue {eigenvalue:.3e})")]
    NotNonpositive { eigenvalue: f64 },
    #[error("imaginary part of the complex form does not vanish on the subspace (residual {residual:.3e})")]
    ImaginaryPart { residual: f64 },
    #[error("kernel of the restricted form is not a complex subspace (defect {defect:.3e})")]
    KernelNotComplex { defect: f64 },
    #[error("bad-set variant needs a sample of root α{expected}, got α{found}")]
    VariantMismatch { expected: usize, found: usize },
    #[error("expansion constant must be at least 1, got {0}")]
    ExpansionConstant(f64),
    #[error("no element of the ray expands by {c} (best factor {best:.4})")]
    NoCertificate { c: f64, best: f64 },
    #[error("expansion certificates need a line, got a {0}-dimensional flag")]
    NotALine(usize),
    #[error("element {index} of L is not ad-nilpotent (residual {residual:.3e})")]
    NotNilpotent { index: usize, residual: f64 },
    #[error("θ has rank {found}, the algebra has rank {expected}")]
    ThetaRank { expected: usize, found: usize },
}
