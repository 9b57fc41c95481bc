//! Representations built from the standard one: identity, exterior powers,
//! adjoint, and finite direct sums of these.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use ano_cartan::exterior::subsets;
use ano_cartan::{exterior_power, AlgebraTag, Group, LieAlgebra};
use ano_linalg::sample::chamber_element;
use ano_linalg::{Mat, Vector};
use ano_roots::{RootSystem, ThetaSet};
use nalgebra::SVD;
use serde::{Deserialize, Serialize};

use crate::{Result, SatakeError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Functor {
    Identity,
    Exterior { degree: usize },
    Adjoint,
    DirectSum { parts: Vec<Functor> },
}

impl Functor {
    fn leaves(&self, out: &mut Vec<Functor>) {
        match self {
            Functor::DirectSum { parts } => parts.iter().for_each(|p| p.leaves(out)),
            leaf => out.push(leaf.clone()),
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::Identity => write!(f, "identity"),
            Functor::Exterior { degree } => write!(f, "exterior{degree}"),
            Functor::Adjoint => write!(f, "adjoint"),
            Functor::DirectSum { parts } => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("+"))
            }
        }
    }
}

/// `identity`, `exteriorK`, `adjoint`, or a `+`-separated sum of those.
impl FromStr for Functor {
    type Err = SatakeError;

    fn from_str(s: &str) -> Result<Self> {
        let leaf = |t: &str| -> Result<Functor> {
            match t.trim() {
                "identity" => Ok(Functor::Identity),
                "adjoint" => Ok(Functor::Adjoint),
                other => other
                    .strip_prefix("exterior")
                    .and_then(|d| d.parse().ok())
                    .map(|degree| Functor::Exterior { degree })
                    .ok_or_else(|| SatakeError::Unsupported(format!("unknown representation `{other}`"))),
            }
        };
        let parts: Vec<Functor> = s.split('+').map(leaf).collect::<Result<_>>()?;
        Ok(if parts.len() == 1 { parts.into_iter().next().expect("one part") } else { Functor::DirectSum { parts } })
    }
}

#[derive(Debug, Clone)]
struct Block {
    functor: Functor,
    offset: usize,
    /// Restricted weights of the basis vectors, in ε-coordinates.
    weights: Vec<Vec<i64>>,
    /// Weights `w` with no `w + α_j` among the weights; one per irreducible summand.
    highest: Vec<Vec<i64>>,
}

/// A representation `τ` of a real group, diagonal on the Cartan subgroup in
/// its basis and orthogonal on `K`.
#[derive(Debug, Clone)]
pub struct Representation {
    group: Group,
    functor: Functor,
    rs: RootSystem,
    algebra: Option<LieAlgebra>,
    blocks: Vec<Block>,
    dim: usize,
}

fn epsilon(rs: &RootSystem) -> Result<&[Vec<i64>]> {
    rs.epsilon().ok_or_else(|| SatakeError::Unsupported(format!("no ε-coordinates for {}", rs.label())))
}

/// `(χ, α_j)` in ε-coordinates.
fn pairing(eps: &[Vec<i64>], w: &[i64], j: usize) -> i64 {
    eps[j].iter().zip(w).map(|(a, b)| a * b).sum()
}

/// `{α : (χ, α) > 0}` for a dominant weight given in ε-coordinates.
pub fn support_of(rs: &RootSystem, highest_weight: &[i64]) -> Result<ThetaSet> {
    let eps = epsilon(rs)?;
    let m = eps.first().map_or(0, |e| e.len());
    if highest_weight.len() != m {
        return Err(SatakeError::WeightLength { expected: m, found: highest_weight.len() });
    }
    let mut members = Vec::new();
    for j in 0..rs.rank() {
        let v = pairing(eps, highest_weight, j);
        if v < 0 {
            return Err(SatakeError::NotDominant { root: j + 1, value: v });
        }
        if v > 0 {
            members.push(j);
        }
    }
    Ok(ThetaSet::new(rs.rank(), members)?)
}

/// Minimum-norm `H` (ε-coordinates) with prescribed simple-root pairings.
pub fn chamber_vector(rs: &RootSystem, pairings: &[f64]) -> Result<Vec<f64>> {
    let eps = epsilon(rs)?;
    if pairings.len() != rs.rank() {
        return Err(SatakeError::WeightLength { expected: rs.rank(), found: pairings.len() });
    }
    let m = eps[0].len();
    let e = Mat::from_fn(rs.rank(), m, |j, k| eps[j][k] as f64);
    let a = Vector::from_column_slice(pairings);
    let h = SVD::new(e, true, true).solve(&a, 1e-12).map_err(|s| SatakeError::Unsupported(s.to_string()))?;
    Ok(h.iter().copied().collect())
}

/// Coefficients of an ε-vector on the simple roots, if it lies in the root lattice.
pub fn root_coordinates(rs: &RootSystem, v: &[i64]) -> Result<Option<Vec<i64>>> {
    let eps = epsilon(rs)?;
    let m = eps[0].len();
    let et = Mat::from_fn(m, rs.rank(), |k, j| eps[j][k] as f64);
    let b = Vector::from_iterator(m, v.iter().map(|&x| x as f64));
    let c = SVD::new(et.clone(), true, true).solve(&b, 1e-12).map_err(|s| SatakeError::Unsupported(s.to_string()))?;
    let rounded: Vec<i64> = c.iter().map(|x| x.round() as i64).collect();
    let back = et * Vector::from_iterator(rs.rank(), rounded.iter().map(|&x| x as f64));
    Ok(((back - b).norm() < 1e-9).then_some(rounded))
}

impl Representation {
    pub fn new(group: Group, functor: Functor) -> Result<Self> {
        let n = group.dim();
        let tag = match &group {
            Group::Gl(n) => AlgebraTag::Sl(*n),
            Group::Opq(f) => AlgebraTag::O(f.p(), f.q()),
            Group::OnC(_) => return Err(SatakeError::Unsupported("Satake embeddings of complex groups".into())),
        };
        let rs = group.root_system()?;
        let eps = epsilon(&rs)?.to_vec();
        let mdim = eps[0].len();
        let std_weight = |i: usize| -> Vec<i64> {
            let mut w = vec![0; mdim];
            match &group {
                Group::Opq(f) if i < f.q() => w[i] = 1,
                Group::Opq(f) if i >= f.p() => w[n - 1 - i] = -1,
                Group::Opq(_) => {}
                _ => w[i] = 1,
            }
            w
        };
        let mut leaves = Vec::new();
        functor.leaves(&mut leaves);
        if leaves.is_empty() {
            return Err(SatakeError::Unsupported("empty direct sum".into()));
        }
        let mut algebra = None;
        let mut blocks = Vec::new();
        let mut offset = 0;
        for leaf in leaves {
            let weights: Vec<Vec<i64>> = match &leaf {
                Functor::Identity => (0..n).map(std_weight).collect(),
                Functor::Exterior { degree } if (1..n).contains(degree) => subsets(n, *degree)
                    .iter()
                    .map(|s| {
                        s.iter().fold(vec![0; mdim], |acc, &i| acc.iter().zip(std_weight(i)).map(|(a, b)| a + b).collect())
                    })
                    .collect(),
                Functor::Exterior { degree } => {
                    return Err(SatakeError::Unsupported(format!("exterior power of degree {degree} in dimension {n}")))
                }
                Functor::Adjoint => {
                    if algebra.is_none() {
                        algebra = Some(LieAlgebra::new(tag)?);
                    }
                    let alg = algebra.as_ref().expect("just built");
                    (0..alg.dim())
                        .map(|j| {
                            let c = alg.weight(j);
                            (0..mdim).map(|k| (0..rs.rank()).map(|i| c[i] * eps[i][k]).sum()).collect()
                        })
                        .collect()
                }
                Functor::DirectSum { .. } => unreachable!("flattened"),
            };
            let set: BTreeSet<&Vec<i64>> = weights.iter().collect();
            let highest: Vec<Vec<i64>> = set
                .iter()
                .filter(|w| {
                    eps.iter().all(|a| !set.contains(&w.iter().zip(a).map(|(x, y)| x + y).collect::<Vec<i64>>()))
                })
                .map(|w| (*w).clone())
                .collect();
            let len = weights.len();
            blocks.push(Block { functor: leaf, offset, weights, highest });
            offset += len;
        }
        Ok(Self { group, functor, rs, algebra, blocks, dim: offset })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weights of the basis vectors (ε-coordinates), block by block.
    pub fn weights(&self) -> Vec<Vec<i64>> {
        self.blocks.iter().flat_map(|b| b.weights.iter().cloned()).collect()
    }

    /// Highest weight of each irreducible summand.
    pub fn highest_weights(&self) -> Vec<Vec<i64>> {
        self.blocks.iter().flat_map(|b| b.highest.iter().cloned()).collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.highest_weights().len() == 1
    }

    /// Union of the supports of the summands.
    pub fn support(&self) -> Result<ThetaSet> {
        let mut s = ThetaSet::empty(self.rs.rank());
        for h in self.highest_weights() {
            s = s.union(&support_of(&self.rs, &h)?);
        }
        Ok(s)
    }

    /// `τ(g)`, block diagonal.
    pub fn apply(&self, g: &Mat) -> Result<Mat> {
        let n = self.group.dim();
        if g.nrows() != n || g.ncols() != n {
            return Err(SatakeError::Size { expected: n, found: g.nrows() });
        }
        let mut out = Mat::zeros(self.dim, self.dim);
        for b in &self.blocks {
            let m = match &b.functor {
                Functor::Identity => g.clone(),
                Functor::Exterior { degree } => exterior_power(g, *degree)?,
                Functor::Adjoint => self.algebra.as_ref().expect("built with the block").adjoint(g)?,
                Functor::DirectSum { .. } => unreachable!("flattened"),
            };
            out.view_mut((b.offset, b.offset), (m.nrows(), m.ncols())).copy_from(&m);
        }
        Ok(out)
    }

    /// `exp(H)` for the chamber vector with the given simple-root pairings.
    pub fn chamber_element(&self, pairings: &[f64]) -> Result<Mat> {
        let h = chamber_vector(&self.rs, pairings)?;
        Ok(match &self.group {
            Group::Opq(f) => chamber_element(f, &h),
            _ => Mat::from_diagonal(&Vector::from_iterator(h.len(), h.iter().map(|x| x.exp()))),
        })
    }

    /// Number of weights `w` of an irreducible `τ` with `χ − w` free of the
    /// roots in `θ`: the rank of the limit point in the orbit of `x_θ`.
    pub fn predicted_rank(&self, theta: &ThetaSet) -> Result<usize> {
        let ([b], [chi]) = (self.blocks.as_slice(), self.blocks[0].highest.as_slice()) else {
            return Err(SatakeError::Unsupported("rank prediction for a reducible representation".into()));
        };
        let mut count = 0;
        for w in &b.weights {
            let diff: Vec<i64> = chi.iter().zip(w).map(|(a, c)| a - c).collect();
            let c = root_coordinates(&self.rs, &diff)?
                .ok_or_else(|| SatakeError::Unsupported(format!("weight {w:?} not linked to the highest weight")))?;
            if theta.iter().all(|i| c[i] == 0) {
                count += 1;
            }
        }
        Ok(count)
    }
}
