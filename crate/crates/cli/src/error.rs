use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Serialize(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Linalg(#[from] ano_linalg::LinalgError),
    #[error(transparent)]
    Cartan(#[from] ano_cartan::CartanError),
    #[error(transparent)]
    Roots(#[from] ano_roots::RootsError),
    #[error(transparent)]
    Words(#[from] ano_words::WordsError),
    #[error(transparent)]
    Limits(#[from] ano_limits::LimitsError),
    #[error(transparent)]
    Domain(#[from] ano_domain::DomainError),
    #[error(transparent)]
    Satake(#[from] ano_satake::SatakeError),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}
