//! Boundary map of a free group evaluated on reduced-word cylinders.

use ano_cartan::{xi_theta, Group};
use ano_linalg::Frame;
use ano_roots::ThetaSet;
use ano_words::gens::{inverse_letter, Letter};
use ano_words::Generators;

use crate::sample::single_root;
use crate::{LimitsError, Result};

/// Default number of repeated tail letters appended to each prefix.
pub const DEFAULT_TAIL: usize = 6;

#[derive(Debug, Clone)]
pub struct CylinderFlag {
    pub prefix: Vec<Letter>,
    pub word: String,
    pub flag: Frame,
}

/// All reduced words of length exactly `depth` in shortlex order.
pub fn reduced_words(letter_count: usize, depth: usize) -> Vec<Vec<Letter>> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..depth {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = w.last().copied();
                (0..letter_count)
                    .filter(move |&l| last.is_none_or(|x| l != inverse_letter(x)))
                    .map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
            })
            .collect();
    }
    words
}

/// `ξ⁺` on the cylinder of each prefix `w`: the flag `Ξ_θ(w·ℓ^tail)` with `ℓ`
/// the last letter of `w` (the first generator for the empty prefix).
///
/// The generators are assumed to form a free basis.
pub fn boundary_map_free_group(
    gens: &Generators,
    group: &Group,
    theta: &ThetaSet,
    depth: usize,
    tail: usize,
    tol: f64,
) -> Result<Vec<CylinderFlag>> {
    single_root(theta)?;
    if gens.dim() != group.dim() {
        return Err(LimitsError::DimensionMismatch { group: group.dim(), gens: gens.dim() });
    }
    reduced_words(gens.letter_count(), depth)
        .into_iter()
        .map(|prefix| {
            let last = prefix.last().copied().unwrap_or(0);
            let mut full = prefix.clone();
            full.extend(std::iter::repeat_n(last, tail));
            let xi = xi_theta(&gens.evaluate(&full), group, theta, tol)?;
            Ok(CylinderFlag { word: gens.format_word(&prefix), prefix, flag: xi.first().expect("singleton θ").clone() })
        })
        .collect()
}
