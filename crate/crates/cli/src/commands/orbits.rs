//! `orbits`: boundary orbits of a Satake compactification as JSON and dot.

use std::str::FromStr;

use ano_roots::{build_root_system, RootSystem, RootType, ThetaSet};
use ano_satake::{closure_edges, orbit_decomposition, orbits_dot, Representation, SatakeOrbit};
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{write_report, write_text, Outcome};
use crate::{CliError, Result};

#[derive(Debug, Serialize)]
struct Body {
    system: String,
    support: ThetaSet,
    /// `labels` when given directly, else the representation it came from.
    support_source: String,
    orbits: Vec<SatakeOrbit>,
    closure_edges: Vec<(usize, usize)>,
}

/// `B2`, `A3`, `BC4`, `E6`, `G2`, …
pub fn parse_system(label: &str) -> Result<RootSystem> {
    let label = label.trim().to_ascii_uppercase();
    let fixed = ["E6", "E7", "E8", "F4", "G2"];
    let (t, rank) = if fixed.contains(&label.as_str()) {
        let rank = label[1..].parse().expect("digit suffix");
        (RootType::from_str(&label)?, rank)
    } else {
        let split = label.find(|c: char| c.is_ascii_digit()).ok_or_else(|| CliError::config(format!("system `{label}` needs a rank")))?;
        let rank = label[split..].parse().map_err(|_| CliError::config(format!("bad rank in `{label}`")))?;
        (RootType::from_str(&label[..split])?, rank)
    };
    Ok(build_root_system(t, rank)?)
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let (rs, support, source) = match &cfg.system {
        Some(label) => {
            let rs = parse_system(label)?;
            let support = match &cfg.support {
                Some(l) => ThetaSet::from_labels(rs.rank(), l.iter().copied())?,
                None => ThetaSet::full(rs.rank()),
            };
            (rs, support, "labels".to_string())
        }
        None => {
            let rep = Representation::new(cfg.group()?, cfg.rep.parse()?)?;
            let support = rep.support()?;
            (rep.root_system().clone(), support, rep.functor().to_string())
        }
    };
    if support.is_empty() {
        return Err(CliError::config("support must be nonempty"));
    }
    let orbits = orbit_decomposition(&rs, &support)?;
    let edges = closure_edges(&orbits);
    out.summary.push(format!("{} with support {}: {} orbits", rs.label(), support, orbits.len()));
    for o in &orbits {
        out.summary.push(format!("  θ = {}  θ∨ = {}  θ‡ = {}", o.theta, o.theta_vee, o.theta_dd));
    }
    out.files.push(write_text(&cfg.output_path("orbits.dot"), &orbits_dot(&rs, &support, &orbits))?);
    let body = Body { system: rs.label(), support, support_source: source, orbits, closure_edges: edges };
    out.files.push(write_report(&cfg.output_path("orbits.json"), cfg, &out.errors, body)?);
    Ok(out)
}
