//! Trace-normalized points `τ(g)τ(g)*` of the Satake embedding.

use ano_linalg::Mat;
use nalgebra::SymmetricEigen;
use serde::Serialize;

use crate::rep::Representation;
use crate::Result;

/// A positive semidefinite symmetric matrix of trace 1 (the representations
/// here are real, so Hermitian means symmetric).
#[derive(Debug, Clone, PartialEq)]
pub struct SatakePoint {
    pub hermitian: Mat,
}

#[derive(Debug, Clone, Serialize)]
pub struct SatakePointJson {
    pub dim: usize,
    pub rank: usize,
    pub eigenvalues: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
}

impl SatakePoint {
    /// Symmetrizes and scales to trace 1.
    pub fn normalized(m: &Mat) -> SatakePoint {
        let s = (m + m.transpose()) * 0.5;
        let t = s.trace();
        SatakePoint { hermitian: s / t }
    }

    pub fn dim(&self) -> usize {
        self.hermitian.nrows()
    }

    /// Eigenvalues, largest first.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut e: Vec<f64> = SymmetricEigen::new(self.hermitian.clone()).eigenvalues.iter().copied().collect();
        e.sort_by(|a, b| b.total_cmp(a));
        e
    }

    /// Eigenvalues above `tol` times the largest.
    pub fn rank(&self, tol: f64) -> usize {
        let e = self.eigenvalues();
        let top = e.first().copied().unwrap_or(0.0);
        e.iter().filter(|&&x| x > tol * top).count()
    }

    pub fn distance(&self, other: &SatakePoint) -> f64 {
        (&self.hermitian - &other.hermitian).norm()
    }

    pub fn to_json(&self, rank_tol: f64) -> SatakePointJson {
        let h = &self.hermitian;
        SatakePointJson {
            dim: self.dim(),
            rank: self.rank(rank_tol),
            eigenvalues: self.eigenvalues(),
            rows: (0..h.nrows()).map(|i| h.row(i).iter().copied().collect()).collect(),
        }
    }
}

/// `[τ(g)τ(g)*]`, computed from `τ(g)` scaled to unit max-entry so that
/// large elements do not overflow.
pub fn satake_embed(rep: &Representation, g: &Mat) -> Result<SatakePoint> {
    let t = rep.apply(g)?;
    let t = &t / t.amax().max(f64::MIN_POSITIVE);
    Ok(SatakePoint::normalized(&(&t * t.transpose())))
}
