//! Opposition involution, τ-admissible sets, nuclei and saturations.

use crate::system::RootSystem;
use crate::theta::ThetaSet;
use crate::{Result, RootsError};

fn check_rank(rs: &RootSystem, t: &ThetaSet) -> Result<()> {
    if t.rank() != rs.rank() {
        return Err(RootsError::IndexOutOfRange { index: t.rank(), rank: rs.rank() });
    }
    Ok(())
}

/// Image of `θ` under `α ↦ α⋆ = -w₀·α`.
pub fn opposition_star(rs: &RootSystem, theta: &ThetaSet) -> ThetaSet {
    ThetaSet::new(rs.rank(), theta.iter().map(|i| rs.opposition()[i])).expect("opposition permutes indices")
}

/// Connectivity of `(Δ∖θ) ∪ {χ}` where `χ` is adjacent exactly to the support.
fn is_admissible_mask(rs: &RootSystem, support: u32, theta: u32) -> bool {
    let n = rs.rank();
    let rest: Vec<usize> = (0..n).filter(|i| theta >> i & 1 == 0).collect();
    // Flood fill from χ.
    let mut reached = vec![false; n];
    let mut stack: Vec<usize> = rest.iter().copied().filter(|&i| support >> i & 1 == 1).collect();
    for &i in &stack {
        reached[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &j in &rest {
            if !reached[j] && rs.adjacent(i, j) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    rest.iter().all(|&i| reached[i])
}

/// All τ-admissible `θ ⊆ Δ`, sorted by size and then by index.
pub fn tau_admissible_sets(rs: &RootSystem, support: &ThetaSet) -> Result<Vec<ThetaSet>> {
    check_rank(rs, support)?;
    if support.is_empty() {
        return Err(RootsError::EmptySupport);
    }
    let n = rs.rank();
    let s = support.mask();
    let mut out: Vec<ThetaSet> =
        (0u32..1 << n).filter(|&m| is_admissible_mask(rs, s, m)).map(|m| ThetaSet::from_mask(n, m)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.labels().cmp(&b.labels())));
    Ok(out)
}

pub fn is_admissible(rs: &RootSystem, support: &ThetaSet, theta: &ThetaSet) -> bool {
    is_admissible_mask(rs, support.mask(), theta.mask())
}

/// `(θ∨, θ‡)`: the simple roots non-orthogonal to `(Δ∖θ) ∪ {χ}`, and `θ ∩ θ∨`.
pub fn nucleus_saturation(rs: &RootSystem, support: &ThetaSet, theta: &ThetaSet) -> Result<(ThetaSet, ThetaSet)> {
    check_rank(rs, support)?;
    check_rank(rs, theta)?;
    if support.is_empty() {
        return Err(RootsError::EmptySupport);
    }
    if !is_admissible(rs, support, theta) {
        return Err(RootsError::NotAdmissible { theta: theta.to_string(), support: support.to_string() });
    }
    let n = rs.rank();
    let rest = theta.complement();
    let vee: Vec<usize> = (0..n)
        .filter(|&a| support.contains(a) || rest.iter().any(|b| rs.gram()[a][b] != 0))
        .collect();
    let vee = ThetaSet::new(n, vee)?;
    let dd = theta.intersection(&vee);
    Ok((vee, dd))
}

/// The smallest τ-admissible set containing `div`. Admissible sets are closed
/// under intersection, so it is unique.
pub fn minimal_admissible_superset(rs: &RootSystem, support: &ThetaSet, div: &ThetaSet) -> Result<ThetaSet> {
    let all = tau_admissible_sets(rs, support)?;
    Ok(all
        .into_iter()
        .filter(|t| div.is_subset(t))
        .reduce(|a, b| a.intersection(&b))
        .expect("Δ is always admissible"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{build_root_system, RootType};

    #[test]
    fn rank_one() {
        let a1 = build_root_system(RootType::A, 1).unwrap();
        let s = ThetaSet::full(1);
        let sets = tau_admissible_sets(&a1, &s).unwrap();
        assert_eq!(sets, vec![ThetaSet::empty(1), ThetaSet::full(1)]);
    }

    #[test]
    fn empty_support_rejected() {
        let a2 = build_root_system(RootType::A, 2).unwrap();
        assert_eq!(tau_admissible_sets(&a2, &ThetaSet::empty(2)), Err(RootsError::EmptySupport));
    }

    #[test]
    fn non_admissible_rejected() {
        let b3 = build_root_system(RootType::B, 3).unwrap();
        let s = ThetaSet::from_labels(3, [3]).unwrap();
        let t = ThetaSet::from_labels(3, [2]).unwrap();
        assert!(matches!(nucleus_saturation(&b3, &s, &t), Err(RootsError::NotAdmissible { .. })));
    }

    #[test]
    fn opposition_on_sets() {
        let a3 = build_root_system(RootType::A, 3).unwrap();
        let t = ThetaSet::from_labels(3, [1]).unwrap();
        assert_eq!(opposition_star(&a3, &t).labels(), vec![3]);
        let b2 = build_root_system(RootType::B, 2).unwrap();
        let t = ThetaSet::from_labels(2, [1]).unwrap();
        assert_eq!(opposition_star(&b2, &t), t);
    }
}
