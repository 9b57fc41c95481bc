//! Divergence profiles: minimal root gaps of `μ` over each sphere.

use ano_cartan::{kak_batch, mu_gaps, Group};
use ano_linalg::{Mat, Strategy};
use serde::Serialize;

use crate::ball::GroupBall;
use crate::{Result, WordsError};

#[derive(Debug, Clone, Serialize)]
pub struct SphereGaps {
    pub radius: usize,
    /// Minimal gap per simple root over the sphere.
    pub min_gap: Vec<f64>,
    /// Shortlex-first word achieving each minimum.
    pub argmin_word: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DivergenceProfile {
    pub root_system: String,
    pub per_radius: Vec<SphereGaps>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthShape {
    /// Affine in the radius fits at least as well as affine in `log r`.
    Linear,
    /// Affine in `log r` fits strictly better.
    Logarithmic,
    /// Too few radii, or no growth.
    Flat,
}

/// Least-squares growth fit of one root's minimal gap against the radius.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    pub rss_linear: f64,
    pub rss_log: f64,
    pub shape: GrowthShape,
}

/// Minimal gaps per sphere. Sphere KAKs run under `strategy`.
pub fn divergence_profile(ball: &GroupBall, group: &Group, strategy: Strategy) -> Result<DivergenceProfile> {
    if ball.is_empty() {
        return Err(WordsError::EmptyBall);
    }
    let rs = group.root_system()?;
    let mats: Vec<Mat> = ball.elements.iter().map(|e| e.matrix.clone()).collect();
    let kaks = kak_batch(&mats, group, strategy);
    let mut gaps = Vec::with_capacity(kaks.len());
    for t in kaks {
        gaps.push(mu_gaps(&t?.mu, &rs)?);
    }
    let per_radius = ball
        .spheres
        .iter()
        .enumerate()
        .filter(|(_, rg)| !rg.is_empty())
        .map(|(radius, rg)| {
            let mut min_gap = vec![f64::INFINITY; rs.rank()];
            let mut argmin_word = vec![String::new(); rs.rank()];
            for i in rg.clone() {
                for (a, &v) in gaps[i].iter().enumerate() {
                    if v < min_gap[a] {
                        min_gap[a] = v;
                        argmin_word[a] = ball.elements[i].word.clone();
                    }
                }
            }
            SphereGaps { radius, min_gap, argmin_word }
        })
        .collect();
    Ok(DivergenceProfile { root_system: rs.label(), per_radius })
}

impl DivergenceProfile {
    /// Fits `min_gap[root]` over radii `≥ 1`.
    pub fn fit(&self, root: usize) -> GrowthFit {
        let pts: Vec<(f64, f64)> = self
            .per_radius
            .iter()
            .filter(|s| s.radius >= 1)
            .map(|s| (s.radius as f64, s.min_gap[root]))
            .collect();
        let (slope, intercept, rss_linear) = least_squares(&pts);
        let logs: Vec<(f64, f64)> = pts.iter().map(|&(r, y)| (r.ln(), y)).collect();
        let (_, _, rss_log) = least_squares(&logs);
        let shape = if pts.len() < 3 || slope <= 0.0 {
            GrowthShape::Flat
        } else if rss_log < rss_linear {
            GrowthShape::Logarithmic
        } else {
            GrowthShape::Linear
        };
        GrowthFit { slope, intercept, rss_linear, rss_log, shape }
    }

    /// CSV rows `radius,root,min_gap,word` with 1-based root labels.
    pub fn to_csv_rows(&self) -> Vec<(usize, usize, f64, String)> {
        self.per_radius
            .iter()
            .flat_map(|s| {
                s.min_gap
                    .iter()
                    .zip(&s.argmin_word)
                    .enumerate()
                    .map(move |(a, (&g, w))| (s.radius, a + 1, g, w.clone()))
            })
            .collect()
    }
}

/// `(slope, intercept, residual sum of squares)`.
fn least_squares(pts: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return (0.0, pts.first().map_or(0.0, |p| p.1), 0.0);
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = my - slope * mx;
    let rss = pts.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    (slope, intercept, rss)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_lines() {
        let (s, b, rss) = least_squares(&[(1.0, 3.0), (2.0, 5.0), (3.0, 7.0)]);
        assert!((s - 2.0).abs() < 1e-12 && (b - 1.0).abs() < 1e-12 && rss < 1e-20);
    }
}
