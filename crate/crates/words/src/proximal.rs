//! Proximal elements and their attracting subspaces.

use ano_linalg::{Frame, Mat};
use serde::Serialize;

use crate::ball::GroupBall;
use crate::gens::{inverse_letter, Letter};

#[derive(Debug, Clone)]
pub struct Proximal {
    pub word: String,
    /// Index of the element in the ball.
    pub index: usize,
    /// Attracting eigen-subspace of dimension `dim`.
    pub attracting: Frame,
    /// `log|λ_dim| − log|λ_{dim+1}|`.
    pub gap: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EigenGap {
    pub gap: f64,
    pub top_is_real: bool,
}

/// Sorted eigenvalue moduli (descending) and whether the leading `dim`
/// eigenvalues are real.
fn spectrum(g: &Mat, dim: usize) -> (Vec<f64>, bool) {
    let scale = g.norm().max(f64::MIN_POSITIVE);
    let ev = (g / scale).complex_eigenvalues();
    let mut v: Vec<_> = ev.iter().copied().collect();
    v.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    let real = v.iter().take(dim).all(|z| z.im.abs() <= 1e-9 * z.norm().max(f64::MIN_POSITIVE));
    (v.iter().map(|z| z.norm() * scale).collect(), real)
}

/// Log-modulus gap between eigenvalues `dim` and `dim + 1`.
pub fn eigen_gap(g: &Mat, dim: usize) -> EigenGap {
    let (m, real) = spectrum(g, dim);
    let gap = if dim == 0 || dim >= m.len() { 0.0 } else { m[dim - 1].ln() - m[dim].ln() };
    EigenGap { gap, top_is_real: real }
}

/// Attracting `dim`-space by orthogonal iteration from a fixed start.
pub fn attracting_space(g: &Mat, dim: usize, iterations: usize) -> Frame {
    let n = g.nrows();
    // Deterministic generic start: a dense matrix with distinct entries.
    let mut q = Mat::from_fn(n, dim, |i, j| 1.0 + ((i * 7 + j * 13) % 11) as f64 / 11.0 + (i == j) as usize as f64);
    let scale = g.norm().max(f64::MIN_POSITIVE);
    let gs = g / scale;
    for _ in 0..iterations {
        q = (&gs * q).qr().q();
    }
    Frame::orthonormalize(&q).expect("finite iterate")
}

/// Splits a reduced word as `u·c·u⁻¹` with `c` cyclically reduced.
pub fn cyclic_split(letters: &[Letter]) -> (&[Letter], &[Letter]) {
    let mut k = 0;
    while 2 * k + 1 < letters.len() && letters[letters.len() - 1 - k] == inverse_letter(letters[k]) {
        k += 1;
    }
    (&letters[..k], &letters[k..letters.len() - k])
}

/// Elements whose top `dim` eigenvalues are real and separated from the rest
/// by at least `gap_threshold` in log-modulus.
///
/// Spectral data is computed on the cyclically reduced core of each word and
/// conjugated back, since the eigenvalues of `u·c·u⁻¹` are lost in rounding
/// once `‖u‖²` dwarfs the spectral radius of `c`.
pub fn proximal_elements(ball: &GroupBall, gap_threshold: f64, dim: usize) -> Vec<Proximal> {
    let gens = &ball.generators;
    ball.elements
        .iter()
        .enumerate()
        .filter_map(|(index, e)| {
            let (u, c) = cyclic_split(&e.letters);
            let core = gens.evaluate(c);
            let eg = eigen_gap(&core, dim);
            if !eg.top_is_real || !(eg.gap > gap_threshold) {
                return None;
            }
            // Enough iterations to contract the start by about 1e-14.
            let iterations = ((32.0 / eg.gap).ceil() as usize).clamp(4, 2000);
            let core_space = attracting_space(&core, dim, iterations);
            let attracting = if u.is_empty() {
                core_space
            } else {
                core_space.transformed(&gens.evaluate(u)).ok()?
            };
            Some(Proximal { word: e.word.clone(), index, attracting, gap: eg.gap })
        })
        .collect()
}
