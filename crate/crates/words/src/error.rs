use ano_cartan::CartanError;
use ano_linalg::LinalgError;
use thiserror::Error;

use crate::ball::GroupBall;

#[derive(Debug, Error)]
pub enum WordsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("generator {name} is not invertible")]
    Singular { name: String },
    #[error("generator {name} is {rows}x{cols}, expected {expected}x{expected}")]
    Shape { name: String, expected: usize, rows: usize, cols: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("duplicate generator name {0}")]
    DuplicateName(String),
    #[error("unknown letter {0:?} in word")]
    UnknownLetter(String),
    #[error("ball exceeded the cap of {cap} elements at radius {radius}")]
    CapExceeded { cap: usize, radius: usize, partial: Box<GroupBall> },
    #[error("ball is empty")]
    EmptyBall,
}
