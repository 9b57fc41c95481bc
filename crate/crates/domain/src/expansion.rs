//! Expansion certificates near a limit line: some `γ = γ_n⁻¹` along a ray
//! expands incidence distances `d(L, P(W))` by at least `c` on a neighborhood.

use ano_linalg::form::restrict_gram;
use ano_linalg::sample::gaussian_matrix;
use ano_linalg::{Frame, Mat, Vector, WittForm};
use ano_words::gens::inverse_word;
use ano_words::{Generators, Letter};
use nalgebra::SymmetricEigen;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::badset::incidence_distance;
use crate::xbar::in_xbar;
use crate::{DomainError, Result};

/// Relative slack on the comparison with `c`, absorbing re-orthonormalization rounding.
const RATIO_SLACK: f64 = 1e-9;

/// Neighborhood radii tried for each ray element, largest first.
pub const DEFAULT_RADII: [f64; 10] = [3e-1, 1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5];

#[derive(Debug, Clone)]
pub struct ExpansionConfig {
    pub c: f64,
    pub radii: Vec<f64>,
    /// Number of planes and of lines drawn per neighborhood; pairs are their product.
    pub grid: usize,
    pub seed: u64,
}

impl ExpansionConfig {
    pub fn new(c: f64, seed: u64) -> Self {
        Self { c, radii: DEFAULT_RADII.to_vec(), grid: 12, seed }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionCertificate {
    /// Position along the ray.
    pub n: usize,
    /// The expanding element `γ_n⁻¹`.
    pub word: String,
    pub radius: f64,
    /// Smallest measured ratio `d(γL, P(γW)) / d(L, P(W))` over the grid.
    pub factor: f64,
    pub pairs: usize,
}

/// Grid of pairs `(W, L)` with `W ∈ X̄_b`, `d(ξ, P(W)) < r` and `L` isotropic with `d(L, ξ) < r`.
#[derive(Debug, Clone)]
pub struct Neighborhood {
    pub radius: f64,
    pub planes: Vec<Frame>,
    pub lines: Vec<Frame>,
}

/// `exp(s·X)` for a random unit `X ∈ o(p,q)`.
pub(crate) fn small_isometry<R: Rng>(form: &WittForm, s: f64, rng: &mut R) -> Mat {
    let n = form.dim();
    let a = gaussian_matrix(n, n, rng);
    let skew = (&a - a.transpose()) * 0.5;
    let x = form.gram() * &skew;
    let x = &x / x.norm().max(f64::MIN_POSITIVE);
    (x * s).exp()
}

/// A negative definite `(q−1)`-plane `b`-orthogonal to `v` and `Gv`.
pub(crate) fn negative_complement(form: &WittForm, v: &Vector) -> Result<Frame> {
    let gv = form.gram() * v;
    let mut m = Mat::zeros(form.dim(), 2);
    m.set_column(0, v);
    m.set_column(1, &gv);
    let c = form.orthogonal_complement(&Frame::orthonormalize(&m)?)?;
    let (r, _) = restrict_gram(form.gram(), &c, 0.0)?;
    let eig = SymmetricEigen::new(r);
    let neg: Vec<usize> = (0..eig.eigenvalues.len()).filter(|&j| eig.eigenvalues[j] < -1e-9).collect();
    let mut cols = Mat::zeros(c.k(), neg.len());
    for (k, &j) in neg.iter().enumerate() {
        cols.set_column(k, &eig.eigenvectors.column(j));
    }
    Ok(Frame::orthonormalize(&(c.columns() * cols))?)
}

impl Neighborhood {
    /// Draws up to `count` planes and lines; draws that land outside the
    /// radius are discarded.
    pub fn sample(flag: &Frame, form: &WittForm, radius: f64, count: usize, seed: u64) -> Result<Self> {
        if flag.k() != 1 {
            return Err(DomainError::NotALine(flag.k()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: Vector = flag.columns().column(0).into_owned();
        // m is negative with b(v, m) = -1, so v + s·m is negative for s > 0.
        let m = -(form.gram() * &v) + &v;
        let nc = negative_complement(form, &v)?;
        let mut planes = Vec::with_capacity(count);
        let mut lines = Vec::with_capacity(count);
        let attempts = 20 * count.max(1);
        for _ in 0..attempts {
            if planes.len() >= count {
                break;
            }
            let s = if planes.is_empty() { 0.0 } else { radius * rng.random::<f64>() };
            let mut cols = Mat::zeros(form.dim(), nc.k() + 1);
            cols.set_column(0, &(&v + &m * s));
            cols.view_mut((0, 1), (form.dim(), nc.k())).copy_from(nc.columns());
            let h = small_isometry(form, radius * rng.random::<f64>(), &mut rng);
            let w = Frame::orthonormalize(&(h * cols))?;
            if incidence_distance(&w, flag) < radius && in_xbar(&w, form, 1e-9).is_ok() {
                planes.push(w);
            }
        }
        for _ in 0..attempts {
            if lines.len() >= count {
                break;
            }
            let h = small_isometry(form, radius * rng.random::<f64>(), &mut rng);
            let l = Frame::line(&(h * &v))?;
            if incidence_distance(&l, flag) < radius {
                lines.push(l);
            }
        }
        Ok(Self { radius, planes, lines })
    }

    /// Smallest expansion ratio of `g` over the grid, with the number of
    /// pairs measured (pairs with `L ⊂ W` are skipped).
    pub fn min_ratio(&self, g: &Mat) -> Result<(f64, usize)> {
        let images: Vec<Frame> = self.planes.iter().map(|w| w.transformed(g)).collect::<std::result::Result<_, _>>()?;
        let line_images: Vec<Frame> = self.lines.iter().map(|l| l.transformed(g)).collect::<std::result::Result<_, _>>()?;
        let mut worst = f64::INFINITY;
        let mut pairs = 0;
        for (w, gw) in self.planes.iter().zip(&images) {
            for (l, gl) in self.lines.iter().zip(&line_images) {
                let before = incidence_distance(w, l);
                if before < 1e-13 {
                    continue;
                }
                pairs += 1;
                worst = worst.min(incidence_distance(gw, gl) / before);
            }
        }
        Ok((worst, pairs))
    }
}

/// Prefixes `γ_0 = 1, γ_1, …, γ_N` of a reduced word, as a ray.
pub fn ray_prefixes(letters: &[Letter]) -> Vec<Vec<Letter>> {
    (0..=letters.len()).map(|k| letters[..k].to_vec()).collect()
}

/// Walks the ray and returns the first `(n, r)` whose grid is expanded by
/// `γ_n⁻¹` by at least `c`. Larger neighborhoods are preferred for each `n`.
pub fn expansion_certificate(
    flag: &Frame,
    ray: &[Vec<Letter>],
    gens: &Generators,
    form: &WittForm,
    cfg: &ExpansionConfig,
) -> Result<ExpansionCertificate> {
    if !(cfg.c >= 1.0) {
        return Err(DomainError::ExpansionConstant(cfg.c));
    }
    let hoods: Vec<Neighborhood> = cfg
        .radii
        .iter()
        .enumerate()
        .map(|(j, &r)| Neighborhood::sample(flag, form, r, cfg.grid, cfg.seed.wrapping_add(j as u64)))
        .collect::<Result<_>>()?;
    let mut best = 0.0_f64;
    for (n, word) in ray.iter().enumerate() {
        let inv = inverse_word(word);
        let g = gens.evaluate(&inv);
        for hood in &hoods {
            let (factor, pairs) = hood.min_ratio(&g)?;
            if pairs == 0 {
                continue;
            }
            best = best.max(factor);
            if factor >= cfg.c * (1.0 - RATIO_SLACK) {
                return Ok(ExpansionCertificate { n, word: gens.format_word(&inv), radius: hood.radius, factor, pairs });
            }
        }
    }
    Err(DomainError::NoCertificate { c: cfg.c, best })
}
