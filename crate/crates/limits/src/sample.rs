//! Limit-set samples `{Ξ_θ(γ)}` over a ball.

use std::collections::HashMap;

use ano_cartan::{kak_batch, mu_gaps, xi_from_kak, Group};
use ano_linalg::{dist_grassmann, Frame, Mat, Strategy};
use ano_roots::ThetaSet;
use ano_words::GroupBall;
use serde::Serialize;

use crate::{LimitsError, Result};

/// Default flag distance under which two samples are merged.
pub const DEFAULT_MERGE_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct LimitPoint {
    pub frame: Frame,
    pub word: String,
    pub word_length: usize,
    /// Gap `⟨α, μ(γ)⟩` of the sampled root at the source element.
    pub gap: f64,
}

#[derive(Debug, Clone)]
pub struct LimitSample {
    pub theta: ThetaSet,
    /// 0-based index of the sampled simple root.
    pub root: usize,
    pub points: Vec<LimitPoint>,
    pub merge_tol: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleStats {
    pub points: usize,
    /// Largest nearest-neighbor distance; a proxy for how finely the sample covers.
    pub covering_radius: f64,
}

pub(crate) fn single_root(theta: &ThetaSet) -> Result<usize> {
    match theta.iter().collect::<Vec<_>>().as_slice() {
        [r] => Ok(*r),
        _ => Err(LimitsError::NotSingleton(theta.to_string())),
    }
}

/// Flag distance; the line case avoids an SVD.
pub fn flag_distance(a: &Frame, b: &Frame) -> f64 {
    if a.k() == 1 && b.k() == 1 {
        let c = a.columns().column(0).dot(&b.columns().column(0));
        return (1.0 - c * c).max(0.0).sqrt();
    }
    dist_grassmann(a, b).unwrap_or(1.0)
}

/// Grid on three projector entries; samples closer than `h` in flag distance
/// land in neighboring cells.
struct Grid {
    h: f64,
    cells: HashMap<[i64; 3], Vec<usize>>,
}

impl Grid {
    fn new(h: f64) -> Self {
        Self { h, cells: HashMap::new() }
    }

    fn key(&self, f: &Frame) -> [i64; 3] {
        let p = f.projector();
        let n = p.nrows();
        let pick = |i: usize, j: usize| (p[(i.min(n - 1), j.min(n - 1))] / self.h).floor() as i64;
        [pick(0, 0), pick(0, 1), pick(1, 1)]
    }

    fn near(&self, f: &Frame) -> impl Iterator<Item = usize> + '_ {
        let k = self.key(f);
        (-1..=1).flat_map(move |a| {
            (-1..=1).flat_map(move |b| {
                (-1..=1).flat_map(move |c| {
                    self.cells.get(&[k[0] + a, k[1] + b, k[2] + c]).into_iter().flatten().copied()
                })
            })
        })
    }

    fn insert(&mut self, f: &Frame, idx: usize) {
        let k = self.key(f);
        self.cells.entry(k).or_default().push(idx);
    }
}

/// Merges candidates in order; the first representative of each cluster is kept.
pub(crate) fn merge_points(candidates: Vec<LimitPoint>, tol: f64) -> Vec<LimitPoint> {
    let mut grid = Grid::new(tol.max(1e-12));
    let mut kept: Vec<LimitPoint> = Vec::new();
    for c in candidates {
        if grid.near(&c.frame).any(|i| flag_distance(&kept[i].frame, &c.frame) < tol) {
            continue;
        }
        grid.insert(&c.frame, kept.len());
        kept.push(c);
    }
    kept
}

/// `Ξ_θ(γ)` for every ball element whose gap exceeds `min_gap`, merged at `merge_tol`.
pub fn sample_limit_set(
    ball: &GroupBall,
    group: &Group,
    theta: &ThetaSet,
    min_gap: f64,
    merge_tol: f64,
    strategy: Strategy,
) -> Result<LimitSample> {
    let root = single_root(theta)?;
    if ball.generators.dim() != group.dim() {
        return Err(LimitsError::DimensionMismatch { group: group.dim(), gens: ball.generators.dim() });
    }
    let rs = group.root_system()?;
    let mats: Vec<Mat> = ball.elements.iter().map(|e| e.matrix.clone()).collect();
    let kaks = kak_batch(&mats, group, strategy);
    let mut candidates = Vec::new();
    for (e, t) in ball.elements.iter().zip(kaks) {
        let t = t?;
        let gap = mu_gaps(&t.mu, &rs)?[root];
        if !(gap > min_gap) {
            continue;
        }
        let xi = xi_from_kak(&t, group, &rs, theta, min_gap)?;
        let frame = xi.first().expect("singleton θ").clone();
        candidates.push(LimitPoint { frame, word: e.word.clone(), word_length: e.word_length(), gap });
    }
    if candidates.is_empty() {
        return Err(LimitsError::EmptySample { min_gap });
    }
    Ok(LimitSample { theta: theta.clone(), root, points: merge_points(candidates, merge_tol), merge_tol })
}

impl LimitSample {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distance from `f` to the nearest sample point and its index.
    pub fn nearest(&self, f: &Frame) -> Option<(usize, f64)> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| (i, flag_distance(&p.frame, f)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }

    pub fn stats(&self, strategy: Strategy) -> SampleStats {
        let nn: Vec<f64> = strategy.map_range(self.points.len(), |i| {
            self.points
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| flag_distance(&self.points[i].frame, &q.frame))
                .fold(f64::INFINITY, f64::min)
        });
        let covering_radius = nn.iter().copied().filter(|d| d.is_finite()).fold(0.0, f64::max);
        SampleStats { points: self.points.len(), covering_radius }
    }

    /// Image of every sample point under `g`, re-merged.
    pub fn transformed(&self, g: &Mat) -> Result<LimitSample> {
        let pts = self
            .points
            .iter()
            .map(|p| Ok(LimitPoint { frame: p.frame.transformed(g)?, ..p.clone() }))
            .collect::<Result<Vec<_>>>()?;
        Ok(LimitSample { points: merge_points(pts, self.merge_tol), ..self.clone() })
    }

    /// One-sided Hausdorff distance: how far the farthest point of `self` is from `other`.
    pub fn directed_hausdorff(&self, other: &LimitSample, strategy: Strategy) -> f64 {
        strategy
            .map(&self.points, |p| other.nearest(&p.frame).map_or(f64::INFINITY, |(_, d)| d))
            .into_iter()
            .fold(0.0, f64::max)
    }
}
