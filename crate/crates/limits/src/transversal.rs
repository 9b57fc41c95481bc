//! Transversality `ξ(η)^⊥ ⊕ ξ(η′) = V` over sampled pairs.

use ano_linalg::{Frame, Mat, Strategy, WittForm};
use ano_linalg::svd::singular_values;
use serde::Serialize;

use crate::sample::{flag_distance, LimitSample};

/// Default distinctness floor for sampled pairs.
pub const DEFAULT_PAIR_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, Serialize)]
pub struct TransversalityReport {
    /// Smallest singular value of `[ξ(η)^⊥ | ξ(η′)]` over counted pairs.
    pub margin: f64,
    /// Sample indices of the worst pair.
    pub worst: Option<(usize, usize)>,
    pub pairs_checked: usize,
    pub pairs_excluded: usize,
}

/// `σ_min [W^⊥_b | W′]` for frames `W`, `W′` of complementary dimension.
pub fn transversality_margin(form: &WittForm, w: &Frame, w2: &Frame) -> f64 {
    let g = form.gram();
    if w.k() == 1 && w2.k() == 1 {
        // [basis of u^⊥ | v] has singular values 1 and sqrt(1 ± s), s = sin∠(Gu, v).
        let u = g * w.columns().column(0);
        let c = (u.dot(&w2.columns().column(0)) / u.norm()).abs().min(1.0);
        let s = (1.0 - c * c).sqrt();
        return (1.0 - s).max(0.0).sqrt();
    }
    let perp = Frame::euclidean_complement_of(&(g * w.columns()));
    let (a, b) = (perp.columns(), w2.columns());
    let mut m = Mat::zeros(a.nrows(), a.ncols() + b.ncols());
    m.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    m.view_mut((0, a.ncols()), (b.nrows(), b.ncols())).copy_from(b);
    singular_values(&m).min()
}

/// Minimum margin over ordered pairs of sample points farther apart than `pair_floor`.
pub fn transversality_report(
    sample: &LimitSample,
    form: &WittForm,
    pair_floor: f64,
    strategy: Strategy,
) -> TransversalityReport {
    let pts = &sample.points;
    let rows: Vec<(f64, Option<usize>, usize, usize)> = strategy.map_range(pts.len(), |i| {
        let mut best = (f64::INFINITY, None, 0usize, 0usize);
        for (j, q) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            if flag_distance(&pts[i].frame, &q.frame) <= pair_floor {
                best.3 += 1;
                continue;
            }
            best.2 += 1;
            let m = transversality_margin(form, &pts[i].frame, &q.frame);
            if m < best.0 {
                best.0 = m;
                best.1 = Some(j);
            }
        }
        best
    });
    let mut report = TransversalityReport { margin: f64::INFINITY, worst: None, pairs_checked: 0, pairs_excluded: 0 };
    for (i, (m, j, checked, excluded)) in rows.into_iter().enumerate() {
        report.pairs_checked += checked;
        report.pairs_excluded += excluded;
        if let Some(j) = j {
            if m < report.margin {
                report.margin = m;
                report.worst = Some((i, j));
            }
        }
    }
    report
}
