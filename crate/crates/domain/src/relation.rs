//! Search for dynamically related pairs: long words moving a domain point
//! to somewhere away from the bad set.

use ano_cartan::{kak_batch, mu_gaps, xi_from_kak, Group};
use ano_limits::LimitSample;
use ano_linalg::{Frame, Mat, Strategy};
use ano_words::GroupBall;
use serde::Serialize;

use crate::badset::{distance_to_bad_set, incidence_distance};
use crate::xbar::CompactPoint;
use crate::Result;

/// Default distance under which an image counts as accumulating on the bad set.
pub const DEFAULT_ACCUMULATION_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy)]
pub struct RelationScanConfig {
    /// Shortest word length scanned; `None` means `max(1, radius / 2)`.
    pub tail_start: Option<usize>,
    pub accumulation_tol: f64,
    /// Gap above which an element's own flag `Ξ(γ)` is used as a bad-set proxy.
    pub min_gap: f64,
}

impl Default for RelationScanConfig {
    fn default() -> Self {
        Self { tail_start: None, accumulation_tol: DEFAULT_ACCUMULATION_TOL, min_gap: 1.0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationFlag {
    pub point: usize,
    pub word: String,
    pub word_length: usize,
    pub distance: f64,
    /// Nearest sampled limit flag.
    pub nearest: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationScan {
    pub flags: Vec<RelationFlag>,
    /// Largest distance from an image `γ·W` to the bad set.
    pub residual: f64,
    pub pairs_checked: usize,
    pub tail_start: usize,
}

/// For every point and every ball element of word length at least
/// `tail_start`, measures the distance from `γ·W` to the bad set and flags
/// the pairs farther than `accumulation_tol`. Flags are ordered by point,
/// then by the ball's word order.
pub fn dynamical_relation_scan(
    points: &[CompactPoint],
    ball: &GroupBall,
    sample: &LimitSample,
    group: &Group,
    cfg: &RelationScanConfig,
    strategy: Strategy,
) -> Result<RelationScan> {
    let tail_start = cfg.tail_start.unwrap_or((ball.radius() / 2).max(1));
    let selected: Vec<usize> =
        (0..ball.len()).filter(|&i| ball.elements[i].word_length() >= tail_start).collect();
    let mut scan = RelationScan { flags: Vec::new(), residual: 0.0, pairs_checked: 0, tail_start };
    if points.is_empty() || selected.is_empty() {
        return Ok(scan);
    }
    let rs = group.root_system()?;
    let mats: Vec<Mat> = selected.iter().map(|&i| ball.elements[i].matrix.clone()).collect();
    let mut own_flags: Vec<Option<Frame>> = Vec::with_capacity(mats.len());
    for t in kak_batch(&mats, group, strategy) {
        let t = t?;
        let gap = mu_gaps(&t.mu, &rs)?[sample.root];
        own_flags.push(if gap > cfg.min_gap {
            xi_from_kak(&t, group, &rs, &sample.theta, cfg.min_gap)?.first().cloned()
        } else {
            None
        });
    }
    let m = selected.len();
    let measured: Vec<Result<(f64, Option<usize>)>> = strategy.map_range(points.len() * m, |pair| {
        let (pi, ei) = (pair / m, pair % m);
        let image = points[pi].frame.transformed(&mats[ei])?;
        if let Some(xi) = &own_flags[ei] {
            let d = incidence_distance(&image, xi);
            if d <= cfg.accumulation_tol {
                return Ok((d, None));
            }
        }
        Ok(distance_to_bad_set(&image, sample).map_or((f64::INFINITY, None), |(i, d)| (d, Some(i))))
    });
    for (pair, r) in measured.into_iter().enumerate() {
        let (d, nearest) = r?;
        scan.pairs_checked += 1;
        scan.residual = scan.residual.max(d);
        if d > cfg.accumulation_tol {
            let e = &ball.elements[selected[pair % m]];
            scan.flags.push(RelationFlag {
                point: pair / m,
                word: e.word.clone(),
                word_length: e.word_length(),
                distance: d,
                nearest,
            });
        }
    }
    Ok(scan)
}
