use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootsError {
    #[error("unsupported root system {label} of rank {rank}")]
    Unsupported { label: String, rank: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("support must be nonempty")]
    EmptySupport,
    #[error("{theta} is not admissible for support {support}")]
    NotAdmissible { theta: String, support: String },
    #[error("weight is not dominant: pairing with α{root} is {value}")]
    NotDominant { root: usize, value: f64 },
    #[error("chamber vector {index} leaves the closed chamber: <α{root}, H> = {value:.3e}")]
    NotInChamber { index: usize, root: usize, value: f64 },
    #[error("chamber vector {index} has length {found}, expected {expected}")]
    WrongLength { index: usize, expected: usize, found: usize },
    #[error("empty chamber sequence")]
    EmptySequence,
    #[error("ambiguous tail for α{root}: minimum {tail_min:.6e} below divergence threshold, spread {spread:.3e} above Cauchy tolerance")]
    Ambiguous { root: usize, tail_min: f64, spread: f64 },
}
