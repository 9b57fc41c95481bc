//! Classification of Weyl-chamber sequences by their Satake limit.

use serde::Serialize;

use crate::satake::minimal_admissible_superset;
use crate::system::RootSystem;
use crate::theta::ThetaSet;
use crate::{Result, RootsError};

/// Finite-sequence stand-ins for the asymptotic conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChamberThresholds {
    /// A pairing diverges when its minimum over the tail reaches this value.
    pub divergence: f64,
    /// A pairing converges when its spread over the tail is at most
    /// `cauchy · max(1, |last|)`.
    pub cauchy: f64,
    /// Allowed negativity of pairings (chamber membership).
    pub chamber_tol: f64,
}

impl Default for ChamberThresholds {
    fn default() -> Self {
        Self { divergence: 1e3, cauchy: 1e-6, chamber_tol: 1e-9 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ChamberLimit {
    /// The sequence converges to a point of the orbit indexed by `theta`;
    /// `finite_coords` lists `(α, t_α)` for `α ∉ θ` (1-based labels).
    Converges { theta: ThetaSet, divergent: ThetaSet, finite_coords: Vec<(usize, f64)> },
    /// Some pairing outside the limiting θ oscillates without settling.
    Diverges { root: usize },
}

enum Tail {
    Divergent,
    Convergent(f64),
    Unsettled { min: f64, spread: f64, monotone: bool },
}

fn classify(values: &[f64], th: &ChamberThresholds) -> Tail {
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let last = *values.last().expect("nonempty tail");
    if min >= th.divergence {
        return Tail::Divergent;
    }
    let spread = max - min;
    if spread <= th.cauchy * last.abs().max(1.0) {
        return Tail::Convergent(last);
    }
    let monotone = values.windows(2).all(|w| w[1] >= w[0]);
    Tail::Unsettled { min, spread, monotone }
}

/// Classifies a sequence `H_n` given by its simple-root pairings
/// `⟨α_i, H_n⟩`, using the last quarter of the sequence as its tail.
pub fn chamber_sequence_limit(
    rs: &RootSystem,
    support: &ThetaSet,
    seq: &[Vec<f64>],
    th: &ChamberThresholds,
) -> Result<ChamberLimit> {
    let n = rs.rank();
    if seq.is_empty() {
        return Err(RootsError::EmptySequence);
    }
    for (index, h) in seq.iter().enumerate() {
        if h.len() != n {
            return Err(RootsError::WrongLength { index, expected: n, found: h.len() });
        }
        if let Some(root) = (0..n).find(|&i| h[i] < -th.chamber_tol) {
            return Err(RootsError::NotInChamber { index, root: root + 1, value: h[root] });
        }
    }
    let start = seq.len() - seq.len().div_ceil(4);
    let tails: Vec<Tail> = (0..n)
        .map(|i| classify(&seq[start..].iter().map(|h| h[i]).collect::<Vec<_>>(), th))
        .collect();
    let div = ThetaSet::new(n, (0..n).filter(|&i| matches!(tails[i], Tail::Divergent)))?;
    let theta = minimal_admissible_superset(rs, support, &div)?;
    let mut finite = Vec::new();
    for i in theta.complement().iter() {
        match tails[i] {
            Tail::Convergent(t) => finite.push((i + 1, t)),
            Tail::Unsettled { monotone: false, .. } => return Ok(ChamberLimit::Diverges { root: i + 1 }),
            Tail::Unsettled { min, spread, .. } => {
                return Err(RootsError::Ambiguous { root: i + 1, tail_min: min, spread })
            }
            Tail::Divergent => unreachable!("divergent roots lie in θ"),
        }
    }
    Ok(ChamberLimit::Converges { theta, divergent: div, finite_coords: finite })
}
