use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::table::{reference_table_entry, Table1Entry};
use crate::{Result, RootsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootType {
    A,
    B,
    C,
    BC,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::BC => "BC",
            RootType::D => "D",
            RootType::E6 => "E6",
            RootType::E7 => "E7",
            RootType::E8 => "E8",
            RootType::F4 => "F4",
            RootType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = RootsError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "BC" => RootType::BC,
            "D" => RootType::D,
            "E6" => RootType::E6,
            "E7" => RootType::E7,
            "E8" => RootType::E8,
            "F4" => RootType::F4,
            "G2" => RootType::G2,
            other => return Err(RootsError::Unsupported { label: other.to_string(), rank: 0 }),
        })
    }
}

/// Simple restricted roots with exact integer pairings.
///
/// `gram[i][j]` is `(α_i, α_j)` up to a common positive scale. Labels follow
/// Bourbaki's numbering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSystem {
    root_type: RootType,
    rank: usize,
    gram: Vec<Vec<i64>>,
    /// Simple roots in ε-coordinates, for the classical types.
    epsilon: Option<Vec<Vec<i64>>>,
    /// Opposition involution `α ↦ -w₀·α` as a permutation of indices.
    opposition: Vec<usize>,
    table1: Option<Table1Entry>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn eps_diff(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = unit(n, i);
    v[j] -= 1;
    v
}

fn gram_of(vectors: &[Vec<i64>]) -> Vec<Vec<i64>> {
    vectors
        .iter()
        .map(|a| vectors.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
        .collect()
}

/// Simply-laced Gram matrix from a list of 1-based edges.
fn simply_laced(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; rank]; rank];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        g[a - 1][b - 1] = -1;
        g[b - 1][a - 1] = -1;
    }
    g
}

pub fn build_root_system(root_type: RootType, rank: usize) -> Result<RootSystem> {
    let unsupported = || RootsError::Unsupported { label: root_type.to_string(), rank };
    let fixed = |r: usize| if rank == r { Ok(()) } else { Err(unsupported()) };
    let (gram, epsilon) = match root_type {
        RootType::A => {
            if rank < 1 {
                return Err(unsupported());
            }
            let eps: Vec<Vec<i64>> = (0..rank).map(|i| eps_diff(rank + 1, i, i + 1)).collect();
            (gram_of(&eps), Some(eps))
        }
        RootType::B | RootType::BC | RootType::C => {
            if rank < 1 {
                return Err(unsupported());
            }
            let mut eps: Vec<Vec<i64>> = (0..rank - 1).map(|i| eps_diff(rank, i, i + 1)).collect();
            let last = if root_type == RootType::C { 2 } else { 1 };
            let mut v = vec![0; rank];
            v[rank - 1] = last;
            eps.push(v);
            (gram_of(&eps), Some(eps))
        }
        RootType::D => {
            if rank < 2 {
                return Err(unsupported());
            }
            let mut eps: Vec<Vec<i64>> = (0..rank - 1).map(|i| eps_diff(rank, i, i + 1)).collect();
            let mut v = vec![0; rank];
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            eps.push(v);
            (gram_of(&eps), Some(eps))
        }
        RootType::E6 => {
            fixed(6)?;
            (simply_laced(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]), None)
        }
        RootType::E7 => {
            fixed(7)?;
            (simply_laced(7, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]), None)
        }
        RootType::E8 => {
            fixed(8)?;
            (simply_laced(8, &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]), None)
        }
        RootType::F4 => {
            fixed(4)?;
            // α1, α2 long; α3, α4 short.
            (vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]], None)
        }
        RootType::G2 => {
            fixed(2)?;
            // α1 short, α2 long.
            (vec![vec![2, -3], vec![-3, 6]], None)
        }
    };
    let opposition = opposition_permutation(root_type, rank);
    let mut rs = RootSystem { root_type, rank, gram, epsilon, opposition, table1: None };
    rs.table1 = reference_table_entry(root_type, rank);
    Ok(rs)
}

fn opposition_permutation(t: RootType, rank: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..rank).collect();
    match t {
        RootType::A => p.reverse(),
        RootType::D if rank % 2 == 1 => p.swap(rank - 2, rank - 1),
        RootType::E6 => {
            p.swap(0, 5);
            p.swap(2, 4);
        }
        _ => {}
    }
    p
}

impl RootSystem {
    pub fn root_type(&self) -> RootType {
        self.root_type
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn label(&self) -> String {
        match self.root_type {
            RootType::E6 | RootType::E7 | RootType::E8 | RootType::F4 | RootType::G2 => self.root_type.to_string(),
            t => format!("{}{}", t, self.rank),
        }
    }
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }
    pub fn epsilon(&self) -> Option<&[Vec<i64>]> {
        self.epsilon.as_deref()
    }
    pub fn opposition(&self) -> &[usize] {
        &self.opposition
    }
    pub fn table1(&self) -> Option<&Table1Entry> {
        self.table1.as_ref()
    }

    /// `(x, y)` for vectors in simple-root coordinates.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// `(x, α_j)` for a vector in simple-root coordinates.
    pub fn pairing_with_simple(&self, x: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|i| x[i] * self.gram[i][j]).sum()
    }

    /// Cartan integers `a_ij = ⟨α_i^∨, α_j⟩ = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| 2 * self.gram[i][j] / self.gram[i][i]).collect())
            .collect()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.gram[i][j] != 0
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically. For `BC` the doubled short roots are included.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut roots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for j in 0..n {
                    // α_j-string through β: p = how far down, then up-length q = p - ⟨β, α_j^∨⟩.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[j] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let cart = 2 * self.pairing_with_simple(beta, j) / self.gram[j][j];
                    if p - cart > 0 {
                        let mut up = beta.clone();
                        up[j] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        if self.root_type == RootType::BC {
            let short = roots.iter().map(|r| self.inner(r, r)).min().unwrap_or(0);
            let doubles: Vec<Vec<i64>> = roots
                .iter()
                .filter(|r| self.inner(r, r) == short)
                .map(|r| r.iter().map(|x| 2 * x).collect())
                .collect();
            roots.extend(doubles);
        }
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        roots.dedup();
        roots
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> Vec<i64> {
        self.positive_roots().pop().expect("nonempty root system")
    }
}
