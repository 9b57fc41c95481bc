//! Simple root `α_G` and highest root `χ_G` per restricted root system type,
//! transcribed from the reference table, with a re-derivation from the pairings.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::system::{build_root_system, RootSystem, RootType};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    /// 1-based label of `α_G`.
    pub alpha_g: usize,
    /// Coefficients of `χ_G` in the simple roots.
    pub chi_g: Vec<i64>,
}

pub(crate) fn reference_table_entry(t: RootType, n: usize) -> Option<Table1Entry> {
    let e = |alpha_g: usize, chi_g: Vec<i64>| Some(Table1Entry { alpha_g, chi_g });
    match t {
        RootType::A => e(1, vec![1; n]),
        RootType::B if n >= 2 => {
            let mut c = vec![2; n];
            c[0] = 1;
            e(2, c)
        }
        RootType::C => {
            let mut c = vec![2; n];
            c[n - 1] = 1;
            e(1, c)
        }
        RootType::BC => e(1, vec![2; n]),
        RootType::D if n >= 4 => {
            let mut c = vec![2; n];
            c[0] = 1;
            c[n - 2] = 1;
            c[n - 1] = 1;
            e(2, c)
        }
        RootType::E6 => e(4, vec![1, 2, 2, 3, 2, 1]),
        RootType::E7 => e(6, vec![2, 2, 3, 4, 3, 2, 1]),
        RootType::E8 => e(7, vec![2, 3, 4, 6, 5, 4, 3, 2]),
        RootType::F4 => e(1, vec![2, 3, 4, 2]),
        RootType::G2 => e(1, vec![3, 2]),
        _ => None,
    }
}

/// One representative per table row.
pub fn table1_default_rows() -> Vec<(RootType, usize)> {
    vec![
        (RootType::A, 4),
        (RootType::B, 4),
        (RootType::C, 4),
        (RootType::BC, 4),
        (RootType::D, 5),
        (RootType::E6, 6),
        (RootType::E7, 7),
        (RootType::E8, 8),
        (RootType::F4, 4),
        (RootType::G2, 2),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Check {
    pub label: String,
    pub alpha_g: usize,
    pub chi_g: Vec<i64>,
    /// `{α_G, α_G⋆}` as 1-based labels.
    pub expected: Vec<usize>,
    /// `{α ∈ Δ | (χ_G, α) > 0}` from the integer pairings.
    pub computed: Vec<usize>,
    pub chi_is_highest_root: bool,
    pub verified: bool,
}

/// Re-derives the table row of `rs` from its pairings.
pub fn table1_check(rs: &RootSystem) -> Option<Table1Check> {
    let entry = rs.table1()?;
    let a = entry.alpha_g - 1;
    let expected: BTreeSet<usize> = [a, rs.opposition()[a]].into_iter().map(|i| i + 1).collect();
    let computed: BTreeSet<usize> =
        (0..rs.rank()).filter(|&j| rs.pairing_with_simple(&entry.chi_g, j) > 0).map(|j| j + 1).collect();
    let chi_is_highest_root = rs.highest_root() == entry.chi_g;
    Some(Table1Check {
        label: rs.label(),
        alpha_g: entry.alpha_g,
        chi_g: entry.chi_g.clone(),
        verified: expected == computed && chi_is_highest_root,
        expected: expected.into_iter().collect(),
        computed: computed.into_iter().collect(),
        chi_is_highest_root,
    })
}

/// Checks every default row.
pub fn table1_all() -> Result<Vec<Table1Check>> {
    table1_default_rows()
        .into_iter()
        .map(|(t, n)| Ok(table1_check(&build_root_system(t, n)?).expect("row has a table entry")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_entry_transcribed() {
        let g2 = build_root_system(RootType::G2, 2).unwrap();
        let e = g2.table1().unwrap();
        assert_eq!((e.alpha_g, e.chi_g.clone()), (1, vec![3, 2]));
    }

    #[test]
    fn classical_rows_verify_at_many_ranks() {
        for n in 1..=8 {
            for t in [RootType::A, RootType::C, RootType::BC] {
                assert!(table1_check(&build_root_system(t, n).unwrap()).unwrap().verified, "{t}{n}");
            }
            if n >= 2 {
                assert!(table1_check(&build_root_system(RootType::B, n).unwrap()).unwrap().verified, "B{n}");
            }
            if n >= 4 {
                assert!(table1_check(&build_root_system(RootType::D, n).unwrap()).unwrap().verified, "D{n}");
            }
        }
    }

    #[test]
    fn chi_column_is_the_highest_root_everywhere() {
        for (t, n) in table1_default_rows() {
            let c = table1_check(&build_root_system(t, n).unwrap()).unwrap();
            assert!(c.chi_is_highest_root, "{}", c.label);
        }
    }
}
