//! Limits of `exp(H_n)·x_∅` along chamber sequences, computed both from the
//! root combinatorics and from the matrices.

use ano_linalg::Strategy;
use ano_roots::{chamber_sequence_limit, ChamberLimit, ChamberThresholds, ThetaSet};
use serde::Serialize;

use crate::point::{satake_embed, SatakePoint};
use crate::rep::Representation;
use crate::{Result, SatakeError};

#[derive(Debug, Clone, Copy)]
pub struct LimitConfig {
    pub thresholds: ChamberThresholds,
    /// Relative eigenvalue cutoff for the numeric rank.
    pub rank_tol: f64,
}

impl Default for LimitConfig {
    fn default() -> Self {
        // Pairings of 30 leave dying entries near e^-60 while exp(H) stays representable.
        Self { thresholds: ChamberThresholds { divergence: 30.0, ..ChamberThresholds::default() }, rank_tol: 1e-10 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakeLimit {
    pub theta: ThetaSet,
    pub divergent: ThetaSet,
    pub predicted_rank: usize,
    pub numeric_rank: usize,
    pub agrees: bool,
    #[serde(skip)]
    pub point: SatakePoint,
}

/// Classifies the sequence (given by simple-root pairings) and evaluates the
/// embedding at its last term; the numeric rank must match the rank
/// predicted for the orbit of `x_θ`.
pub fn satake_limit(rep: &Representation, seq: &[Vec<f64>], cfg: &LimitConfig) -> Result<SatakeLimit> {
    let support = rep.support()?;
    let (theta, divergent) = match chamber_sequence_limit(rep.root_system(), &support, seq, &cfg.thresholds)? {
        ChamberLimit::Converges { theta, divergent, .. } => (theta, divergent),
        ChamberLimit::Diverges { root } => return Err(SatakeError::NoLimit { root }),
    };
    let predicted_rank = rep.predicted_rank(&theta)?;
    let last = seq.last().expect("classified sequences are nonempty");
    let point = satake_embed(rep, &rep.chamber_element(last)?)?;
    let numeric_rank = point.rank(cfg.rank_tol);
    Ok(SatakeLimit { theta, divergent, predicted_rank, numeric_rank, agrees: predicted_rank == numeric_rank, point })
}

pub fn satake_limit_batch(
    rep: &Representation,
    seqs: &[Vec<Vec<f64>>],
    cfg: &LimitConfig,
    strategy: Strategy,
) -> Vec<Result<SatakeLimit>> {
    strategy.map(seqs, |s| satake_limit(rep, s, cfg))
}
