//! Word-length balls with matrix deduplication.

use std::collections::BTreeMap;
use std::ops::Range;

use ano_linalg::{Mat, Strategy};

use crate::gens::{inverse_letter, Generators, Letter};
use crate::{Result, WordsError};

/// Default relative Frobenius tolerance for identifying two elements.
pub const DEFAULT_DEDUP_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct BallElement {
    pub letters: Vec<Letter>,
    pub word: String,
    pub matrix: Mat,
}

impl BallElement {
    pub fn word_length(&self) -> usize {
        self.letters.len()
    }
}

/// Deduplicated elements in shortlex order, graded by word length.
#[derive(Debug, Clone)]
pub struct GroupBall {
    pub generators: Generators,
    pub elements: Vec<BallElement>,
    /// `spheres[r]` indexes the elements of word length `r`.
    pub spheres: Vec<Range<usize>>,
    pub dedup_tol: f64,
    pub truncated: bool,
}

impl GroupBall {
    pub fn radius(&self) -> usize {
        self.spheres.len().saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sphere(&self, r: usize) -> &[BallElement] {
        self.spheres.get(r).map_or(&[], |rg| &self.elements[rg.clone()])
    }

    /// Index of a stored element equal to `m` within the ball's tolerance.
    pub fn find(&self, m: &Mat) -> Option<usize> {
        self.elements.iter().position(|e| relative_distance(&e.matrix, m) <= self.dedup_tol)
    }
}

pub fn relative_distance(a: &Mat, b: &Mat) -> f64 {
    let scale = a.norm().max(b.norm()).max(f64::MIN_POSITIVE);
    (a - b).norm() / scale
}

/// Frobenius-norm index for near-duplicate lookup.
struct NormIndex {
    by_norm: BTreeMap<u64, Vec<usize>>,
    tol: f64,
}

impl NormIndex {
    fn new(tol: f64) -> Self {
        Self { by_norm: BTreeMap::new(), tol }
    }

    fn key(x: f64) -> u64 {
        // Norms are nonnegative, so the bit pattern is monotone.
        x.max(0.0).to_bits()
    }

    fn find(&self, elements: &[BallElement], m: &Mat) -> Option<usize> {
        let n = m.norm();
        let lo = Self::key(n * (1.0 - self.tol) - f64::MIN_POSITIVE);
        let hi = Self::key(n / (1.0 - self.tol).max(f64::MIN_POSITIVE) + f64::MIN_POSITIVE);
        self.by_norm
            .range(lo..=hi)
            .flat_map(|(_, v)| v.iter())
            .copied()
            .find(|&i| relative_distance(&elements[i].matrix, m) <= self.tol)
    }

    fn insert(&mut self, m: &Mat, idx: usize) {
        self.by_norm.entry(Self::key(m.norm())).or_default().push(idx);
    }
}

/// All reduced products of length at most `radius`, deduplicated; at most `cap` elements.
///
/// Returns [`WordsError::CapExceeded`] carrying the truncated ball if the cap is hit.
pub fn enumerate_ball(
    gens: &Generators,
    radius: usize,
    dedup_tol: f64,
    cap: usize,
    strategy: Strategy,
) -> Result<GroupBall> {
    let n = gens.dim();
    let mut ball = GroupBall {
        generators: gens.clone(),
        elements: vec![BallElement { letters: Vec::new(), word: "1".into(), matrix: Mat::identity(n, n) }],
        spheres: vec![0..1],
        dedup_tol,
        truncated: false,
    };
    let mut index = NormIndex::new(dedup_tol);
    index.insert(&ball.elements[0].matrix, 0);
    for _ in 1..=radius {
        if !grow(&mut ball, &mut index, cap, strategy)? {
            break;
        }
    }
    Ok(ball)
}

/// Adds the next sphere to `ball`; the result equals a direct enumeration
/// at the larger radius.
pub fn extend_ball(ball: GroupBall, cap: usize, strategy: Strategy) -> Result<GroupBall> {
    let mut ball = ball;
    let mut index = NormIndex::new(ball.dedup_tol);
    for (i, e) in ball.elements.iter().enumerate() {
        index.insert(&e.matrix, i);
    }
    grow(&mut ball, &mut index, cap, strategy)?;
    Ok(ball)
}

/// Appends one sphere. Returns whether anything new was found.
fn grow(ball: &mut GroupBall, index: &mut NormIndex, cap: usize, strategy: Strategy) -> Result<bool> {
    let r = ball.spheres.len();
    let prev = ball.spheres[r - 1].clone();
    if prev.is_empty() {
        ball.spheres.push(prev.end..prev.end);
        return Ok(false);
    }
    let gens = ball.generators.clone();
    let candidates: Vec<(usize, Letter)> = prev
        .flat_map(|i| {
            let last = ball.elements[i].letters.last().copied();
            (0..gens.letter_count())
                .filter(move |&l| last.is_none_or(|x| l != inverse_letter(x)))
                .map(move |l| (i, l))
        })
        .collect();
    let elements = &ball.elements;
    let products: Vec<Mat> = strategy.map(&candidates, |&(i, l)| &elements[i].matrix * gens.letter_matrix(l));
    let start = ball.elements.len();
    for ((parent, l), m) in candidates.into_iter().zip(products) {
        if index.find(&ball.elements, &m).is_some() {
            continue;
        }
        if ball.elements.len() >= cap {
            ball.spheres.push(start..ball.elements.len());
            ball.truncated = true;
            return Err(WordsError::CapExceeded { cap, radius: r, partial: Box::new(ball.clone()) });
        }
        let mut letters = ball.elements[parent].letters.clone();
        letters.push(l);
        let idx = ball.elements.len();
        index.insert(&m, idx);
        ball.elements.push(BallElement { word: gens.format_word(&letters), letters, matrix: m });
    }
    ball.spheres.push(start..ball.elements.len());
    Ok(ball.elements.len() > start)
}
