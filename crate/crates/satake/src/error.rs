use thiserror::Error;

#[derive(Debug, Error)]
pub enum SatakeError {
    #[error(transparent)]
    Linalg(#[from] ano_linalg::LinalgError),
    #[error(transparent)]
    Cartan(#[from] ano_cartan::CartanError),
    #[error(transparent)]
    Roots(#[from] ano_roots::RootsError),
    #[error("weight is not dominant: pairing with α{root} is {value}")]
    NotDominant { root: usize, value: i64 },
    #[error("weight has {found} coordinates, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("matrix of size {found} does not match the representation's group of size {expected}")]
    Size { expected: usize, found: usize },
    #[error("sequence classified as divergent at α{root}: no limit")]
    NoLimit { root: usize },
}
