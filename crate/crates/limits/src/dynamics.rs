//! Dynamics preservation: attracting fixed flags of proximal elements lie on the sample.

use ano_linalg::Frame;
use ano_words::{GroupBall, Proximal};
use serde::Serialize;

use crate::sample::{flag_distance, LimitSample};
use crate::Result;

/// Sample points used per element for the contraction estimate.
const CONTRACTION_PROBES: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct DynamicsRecord {
    pub word: String,
    /// Distance from the attracting flag to the nearest sample point.
    pub distance: f64,
    /// Largest ratio `d(γx, A) / d(x, A)` over nearby sample points `x`;
    /// `None` when no probe point was available.
    pub contraction: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DynamicsReport {
    pub records: Vec<DynamicsRecord>,
    pub max_distance: f64,
}

pub fn dynamics_preserving_check(
    sample: &LimitSample,
    ball: &GroupBall,
    proximals: &[Proximal],
) -> Result<DynamicsReport> {
    let mut records = Vec::with_capacity(proximals.len());
    for p in proximals {
        let a = &p.attracting;
        let distance = sample.nearest(a).map_or(f64::INFINITY, |(_, d)| d);
        let g = &ball.elements[p.index].matrix;
        let mut near: Vec<(f64, &Frame)> = sample
            .points
            .iter()
            .map(|q| (flag_distance(&q.frame, a), &q.frame))
            .filter(|(d, _)| *d > sample.merge_tol && *d < 0.5)
            .collect();
        near.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut contraction: Option<f64> = None;
        for (d, x) in near.into_iter().take(CONTRACTION_PROBES) {
            let moved = x.transformed(g)?;
            let ratio = flag_distance(&moved, a) / d;
            contraction = Some(contraction.map_or(ratio, |c| c.max(ratio)));
        }
        records.push(DynamicsRecord { word: p.word.clone(), distance, contraction });
    }
    let max_distance = records.iter().map(|r| r.distance).fold(0.0, f64::max);
    Ok(DynamicsReport { records, max_distance })
}
