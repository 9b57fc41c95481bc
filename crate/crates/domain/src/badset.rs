//! Bad sets: boundary planes meeting (`W^i`) or containing (`N`) a limit flag.

use ano_limits::LimitSample;
use ano_linalg::angles::incidence_sine;
use ano_linalg::{contains, intersects, principal_sines, Frame};
use serde::{Deserialize, Serialize};

use crate::xbar::CompactPoint;
use crate::{DomainError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BadSetVariant {
    /// `L ∩ W ≠ 0` for a limit flag `L` of the 1-based root index.
    Intersect(usize),
    /// `L ⊂ W` for a limit line `L`.
    Contain1,
}

impl BadSetVariant {
    /// 1-based root index the sample must carry.
    pub fn root(self) -> usize {
        match self {
            BadSetVariant::Intersect(i) => i,
            BadSetVariant::Contain1 => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BadSetHit {
    pub hit: bool,
    /// Index of the first sample point witnessing the hit.
    pub witness: Option<usize>,
}

/// Scans the sample for a flag incident to `w` within `tol`.
pub fn in_bad_set(w: &CompactPoint, sample: &LimitSample, variant: BadSetVariant, tol: f64) -> Result<BadSetHit> {
    if sample.root + 1 != variant.root() {
        return Err(DomainError::VariantMismatch { expected: variant.root(), found: sample.root + 1 });
    }
    let witness = sample.points.iter().position(|p| match variant {
        BadSetVariant::Intersect(_) => intersects(&p.frame, &w.frame, tol),
        BadSetVariant::Contain1 => contains(&p.frame, &w.frame, tol),
    });
    Ok(BadSetHit { hit: witness.is_some(), witness })
}

/// Distance from `w` to the sampled incidence sets `{W' ⊇ L}`, with the
/// index of the nearest flag. `None` for an empty sample.
pub fn distance_to_bad_set(w: &Frame, sample: &LimitSample) -> Option<(usize, f64)> {
    sample
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| (i, incidence_distance(w, &p.frame)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// How far `l` is from lying in `w`: the largest principal sine of `l`
/// against `w` (for a line, the distance from `L` to `P(W)`).
pub fn incidence_distance(w: &Frame, l: &Frame) -> f64 {
    if l.k() == 1 {
        return incidence_sine(w, l.columns().column(0).as_slice());
    }
    principal_sines(l, w).ok().and_then(|s| s.last().copied()).unwrap_or(1.0)
}
