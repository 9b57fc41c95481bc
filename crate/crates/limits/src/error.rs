use ano_cartan::CartanError;
use ano_linalg::LinalgError;
use ano_words::WordsError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LimitsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Words(#[from] WordsError),
    #[error("θ must be a single simple root, got {0}")]
    NotSingleton(String),
    #[error("no ball element clears the minimal gap {min_gap}; enlarge the ball")]
    EmptySample { min_gap: f64 },
    #[error("the group acts on dimension {group}, the generators on {gens}")]
    DimensionMismatch { group: usize, gens: usize },
    #[error("chart index {index} out of range for dimension {dim}")]
    Chart { index: usize, dim: usize },
}
