//! Brute-force checks of the incidence equivalences for nonpositive planes
//! and isotropic subspaces:
//! `L ∩ W ≠ 0 ⟺ W + L^⊥ ≠ V` and `L ⊂ W ⟺ W ⊂ L^⊥`, together with the
//! null-vector property of the restricted form.

use ano_linalg::sample::{graph_plane, random_form_preserving, random_isotropic_line};
use ano_linalg::{contains, intersects, Frame, Mat, Strategy, WittForm};
use ano_linalg::svd::singular_values;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::expansion::negative_complement;
use crate::xbar::{in_xbar, kernel_of};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IncidenceVerdict {
    pub intersects: bool,
    pub sum_is_proper: bool,
    pub contains: bool,
    pub inside_perp: bool,
}

impl IncidenceVerdict {
    pub fn consistent(&self) -> bool {
        self.intersects == self.sum_is_proper && self.contains == self.inside_perp
    }
}

/// Evaluates all four incidence predicates under rank decisions at `tol`.
pub fn incidence_verdict(form: &WittForm, l: &Frame, w: &Frame, tol: f64) -> Result<IncidenceVerdict> {
    let perp = form.orthogonal_complement(l)?;
    let n = form.dim();
    let mut m = Mat::zeros(n, w.k() + perp.k());
    m.view_mut((0, 0), (n, w.k())).copy_from(w.columns());
    m.view_mut((0, w.k()), (n, perp.k())).copy_from(perp.columns());
    let sv = singular_values(&m);
    let smallest = if sv.len() < n { 0.0 } else { sv.iter().copied().fold(f64::INFINITY, f64::min) };
    Ok(IncidenceVerdict {
        intersects: intersects(l, w, tol),
        sum_is_proper: smallest < tol,
        contains: contains(l, w, tol),
        inside_perp: contains(w, &perp, tol),
    })
}

/// Null vectors of the restricted form are `b`-orthogonal to the whole plane.
/// Returns the largest `|b(x, y)|` over unit `x ∈ W`, `y ∈ Ker`.
pub fn kernel_orthogonality_residual(form: &WittForm, w: &Frame, tol: f64) -> Result<f64> {
    let p = in_xbar(w, form, tol)?;
    let k = kernel_of(&p, tol)?;
    if k.k() == 0 {
        return Ok(0.0);
    }
    Ok((w.columns().transpose() * form.gram() * k.columns()).amax())
}

#[derive(Debug, Clone, Serialize)]
pub struct IncidenceReport {
    pub samples: usize,
    /// Samples constructed with `L ⊂ W`.
    pub incident: usize,
    pub violations: usize,
    pub null_violations: usize,
    pub max_null_residual: f64,
}

/// Case mix per index: generic pairs (with boundary planes a third of the
/// time), exactly incident pairs, and incident pairs tilted into the
/// interior by `10^-3 … 10^-1`.
fn draw_pair(form: &WittForm, idx: usize, seed: u64) -> Result<(Frame, Frame, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let l = random_isotropic_line(form, &mut rng);
    match idx % 3 {
        0 => {
            let s: Vec<f64> = (0..form.q())
                .map(|_| if rng.random::<f64>() < 1.0 / 3.0 { 1.0 } else { rng.random::<f64>() })
                .collect();
            Ok((l, graph_plane(form, &s, &mut rng), false))
        }
        case => {
            let v = l.columns().column(0).into_owned();
            let nc = negative_complement(form, &v)?;
            // Tilting v towards m (negative, b(v, m) = -1) leaves L at first order.
            let s = if case == 1 { 0.0 } else { 10f64.powf(-1.0 - 2.0 * rng.random::<f64>()) };
            let m = -(form.gram() * &v) + &v;
            let w = Frame::line(&(&v + m * s))?.sum(&nc)?;
            let g = random_form_preserving(form, 1.0, &mut rng);
            Ok((l.transformed(&g)?, w.transformed(&g)?, case == 1))
        }
    }
}

/// Runs `samples` random checks at rank tolerance `tol`.
pub fn incidence_brute_force(form: &WittForm, samples: usize, seed: u64, tol: f64, strategy: Strategy) -> Result<IncidenceReport> {
    let results: Vec<Result<(bool, bool, f64)>> = strategy.map_range(samples, |i| {
        let (l, w, incident) = draw_pair(form, i, seed)?;
        let verdict = incidence_verdict(form, &l, &w, tol)?;
        let residual = kernel_orthogonality_residual(form, &w, tol)?;
        Ok((incident, verdict.consistent() && (!incident || verdict.contains), residual))
    });
    let mut report = IncidenceReport { samples, incident: 0, violations: 0, null_violations: 0, max_null_residual: 0.0 };
    for r in results {
        let (incident, ok, residual) = r?;
        report.incident += incident as usize;
        report.violations += (!ok) as usize;
        report.null_violations += (residual > 10.0 * tol) as usize;
        report.max_null_residual = report.max_null_residual.max(residual);
    }
    Ok(report)
}
