//! Boundary orbits of a (generalized) Satake compactification.

use std::fmt::Write;

use ano_roots::{nucleus_saturation, tau_admissible_sets, RootSystem, ThetaSet};
use serde::Serialize;

use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SatakeOrbit {
    pub theta: ThetaSet,
    pub theta_vee: ThetaSet,
    pub theta_dd: ThetaSet,
    pub boundary_levi_rank: usize,
    pub is_closed: bool,
    pub is_open: bool,
}

/// One orbit per admissible `θ`, ordered by size of `θ`.
pub fn orbit_decomposition(rs: &RootSystem, support: &ThetaSet) -> Result<Vec<SatakeOrbit>> {
    tau_admissible_sets(rs, support)?
        .into_iter()
        .map(|theta| {
            let (theta_vee, theta_dd) = nucleus_saturation(rs, support, &theta)?;
            Ok(SatakeOrbit {
                boundary_levi_rank: rs.rank() - theta.len(),
                is_closed: theta.len() == rs.rank(),
                is_open: theta.is_empty(),
                theta,
                theta_vee,
                theta_dd,
            })
        })
        .collect()
}

/// Covering relations of the closure order: orbit `j` lies in the closure
/// of orbit `i` when `θ_i ⊂ θ_j`.
pub fn closure_edges(orbits: &[SatakeOrbit]) -> Vec<(usize, usize)> {
    let below = |i: usize, j: usize| i != j && orbits[i].theta.is_subset(&orbits[j].theta);
    let mut edges = Vec::new();
    for i in 0..orbits.len() {
        for j in 0..orbits.len() {
            if below(i, j) && !(0..orbits.len()).any(|k| below(i, k) && below(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Graphviz rendering of the closure order.
pub fn orbits_dot(rs: &RootSystem, support: &ThetaSet, orbits: &[SatakeOrbit]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph satake_orbits {{");
    let _ = writeln!(s, "  label=\"{} support {}\";", rs.label(), support);
    for (i, o) in orbits.iter().enumerate() {
        let shape = if o.is_open { "doublecircle" } else if o.is_closed { "box" } else { "ellipse" };
        let _ = writeln!(
            s,
            "  o{i} [shape={shape}, label=\"θ={}\\nθ∨={}\\nθ‡={}\"];",
            o.theta, o.theta_vee, o.theta_dd
        );
    }
    for (i, j) in closure_edges(orbits) {
        let _ = writeln!(s, "  o{i} -> o{j};");
    }
    let _ = writeln!(s, "}}");
    s
}
