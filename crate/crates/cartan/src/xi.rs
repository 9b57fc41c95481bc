//! The flag map `g ↦ k_g · (standard flag)`.

use ano_linalg::{Frame, Mat};
use ano_roots::{RootSystem, RootType, ThetaSet};

use crate::group::{mu_gaps, Group};
use crate::kak::{kak, Compact, KakTriple};
use crate::{CartanError, Result};

/// One subspace per root of θ, each spanned by columns of `k`.
#[derive(Debug, Clone)]
pub struct XiFlag {
    pub theta: ThetaSet,
    /// `(root index, subspace)` in increasing root order.
    pub parts: Vec<(usize, Frame)>,
}

impl XiFlag {
    pub fn part(&self, root: usize) -> Option<&Frame> {
        self.parts.iter().find(|(r, _)| *r == root).map(|(_, f)| f)
    }

    /// The subspace of the smallest root in θ.
    pub fn first(&self) -> Option<&Frame> {
        self.parts.first().map(|(_, f)| f)
    }
}

/// Column indices of `k` spanning the standard subspace fixed by the
/// maximal parabolic of simple root `root` (0-based).
pub fn standard_columns(group: &Group, rs: &RootSystem, root: usize) -> Vec<usize> {
    let i = root + 1;
    match (group, rs.root_type()) {
        // The two families of maximal isotropic subspaces in the split even case.
        (Group::Opq(_), RootType::D) | (Group::OnC(_), RootType::D) if i + 1 == rs.rank() => {
            let m = rs.rank();
            (0..m - 1).chain([m]).collect()
        }
        _ => (0..i).collect(),
    }
}

/// Real frame from the chosen columns of `k`; complex columns `v` contribute
/// the pair `(v, √−1·v)` realified.
fn frame_from_columns(k: &Compact, cols: &[usize]) -> Result<Frame> {
    let m = match k {
        Compact::Real(k) => {
            let mut m = Mat::zeros(k.nrows(), cols.len());
            for (j, &c) in cols.iter().enumerate() {
                m.set_column(j, &k.column(c));
            }
            m
        }
        Compact::Complex(k) => {
            let n = k.nrows();
            let mut m = Mat::zeros(2 * n, 2 * cols.len());
            for (j, &c) in cols.iter().enumerate() {
                for r in 0..n {
                    let z = k[(r, c)];
                    m[(r, 2 * j)] = z.re;
                    m[(n + r, 2 * j)] = z.im;
                    m[(r, 2 * j + 1)] = -z.im;
                    m[(n + r, 2 * j + 1)] = z.re;
                }
            }
            m
        }
    };
    match Frame::from_orthonormal(m.clone()) {
        Ok(f) => Ok(f),
        Err(_) => Ok(Frame::from_columns(&m, 1e-8)?),
    }
}

/// Flag of a precomputed KAK triple; every root in θ must have gap above `tol`.
pub fn xi_from_kak(t: &KakTriple, group: &Group, rs: &RootSystem, theta: &ThetaSet, tol: f64) -> Result<XiFlag> {
    let gaps = mu_gaps(&t.mu, rs)?;
    if theta.rank() != rs.rank() {
        return Err(CartanError::Incompatible { system: rs.label(), group: group.tag().to_string(), len: theta.rank() });
    }
    let mut parts = Vec::with_capacity(theta.len());
    for r in theta.iter() {
        if !(gaps[r] > tol) {
            return Err(CartanError::GapTooSmall { root: r + 1, value: gaps[r] });
        }
        parts.push((r, frame_from_columns(&t.k, &standard_columns(group, rs, r))?));
    }
    Ok(XiFlag { theta: theta.clone(), parts })
}

/// `Ξ_θ(g)` for a real matrix `g` of the group.
pub fn xi_theta(g: &Mat, group: &Group, theta: &ThetaSet, tol: f64) -> Result<XiFlag> {
    let rs = group.root_system()?;
    let t = kak(g, group)?;
    xi_from_kak(&t, group, &rs, theta, tol)
}
