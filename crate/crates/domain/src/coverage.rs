//! Sampling of the domain and the orbit-coverage curve.

use ano_limits::LimitSample;
use ano_linalg::sample::random_frame;
use ano_linalg::{dist_grassmann, Strategy, WittForm};
use ano_words::GroupBall;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::badset::distance_to_bad_set;
use crate::xbar::{in_xbar, CompactPoint};
use crate::Result;

/// Uniform frames (Gaussian orthonormalization) rejected onto `X̄_b`.
/// Deterministic in `seed`; gives up after `1000·count` draws.
pub fn sample_domain_points(form: &WittForm, count: usize, seed: u64, tol: f64) -> Vec<CompactPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count.saturating_mul(1000) {
        if out.len() >= count {
            break;
        }
        if let Ok(p) = in_xbar(&random_frame(form.dim(), form.q(), &mut rng), form, tol) {
            out.push(p);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CoverageConfig {
    pub trials: usize,
    /// Margins from the bad set at which the covered fraction is reported.
    pub margins: Vec<f64>,
    pub d_core: f64,
    pub seed: u64,
}

impl Default for CoverageConfig {
    fn default() -> Self {
        Self { trials: 200, margins: vec![0.0, 0.01, 0.03, 0.1, 0.3], d_core: 0.25, seed: 0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveragePoint {
    pub margin: f64,
    /// Sampled points at least `margin` away from the bad set.
    pub considered: usize,
    pub covered: usize,
    pub fraction: Option<f64>,
}

/// For sampled domain points, whether some ball element moves them within
/// `d_core` of a core point; reported as a function of the distance to the
/// bad set.
pub fn orbit_coverage(
    core: &[CompactPoint],
    ball: &GroupBall,
    sample: &LimitSample,
    form: &WittForm,
    cfg: &CoverageConfig,
    strategy: Strategy,
) -> Result<Vec<CoveragePoint>> {
    let trials = sample_domain_points(form, cfg.trials, cfg.seed, 1e-9);
    let measured: Vec<Result<(f64, bool)>> = strategy.map(&trials, |w| {
        let margin = distance_to_bad_set(&w.frame, sample).map_or(1.0, |(_, d)| d);
        for e in &ball.elements {
            let image = w.frame.transformed(&e.matrix)?;
            for c in core {
                if dist_grassmann(&image, &c.frame)? < cfg.d_core {
                    return Ok((margin, true));
                }
            }
        }
        Ok((margin, false))
    });
    let measured: Vec<(f64, bool)> = measured.into_iter().collect::<Result<_>>()?;
    Ok(cfg
        .margins
        .iter()
        .map(|&m| {
            let kept: Vec<bool> = measured.iter().filter(|(d, _)| *d >= m).map(|(_, c)| *c).collect();
            let covered = kept.iter().filter(|&&c| c).count();
            let fraction = (!kept.is_empty()).then(|| covered as f64 / kept.len() as f64);
            CoveragePoint { margin: m, considered: kept.len(), covered, fraction }
        })
        .collect())
}
