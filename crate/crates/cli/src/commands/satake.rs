//! `satake`: trace-normalized `τ(g)τ(g)*` for a batch of matrices.

use ano_satake::{satake_embed, Representation, SatakePointJson};
use ano_roots::ThetaSet;
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{load_generators, read_matrices, write_report, ErrorRecord, Outcome};
use crate::Result;

/// Relative eigenvalue cutoff for the reported rank.
const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Serialize)]
struct Record {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    point: SatakePointJson,
}

#[derive(Debug, Serialize)]
struct Body {
    representation: String,
    dim: usize,
    support: ThetaSet,
    points: Vec<Record>,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let rep = Representation::new(cfg.group()?, cfg.rep.parse()?)?;
    let items: Vec<(Option<String>, ano_linalg::json::MatrixJson)> = match &cfg.input {
        Some(path) => read_matrices(path)?.into_iter().map(|e| (e.name().map(String::from), e.matrix().clone())).collect(),
        None => load_generators(&cfg.gens)?.to_specs().into_iter().map(|s| (Some(s.name), s.matrix)).collect(),
    };
    let mut points = Vec::new();
    for (index, (name, m)) in items.into_iter().enumerate() {
        let embedded = m.to_real().map_err(crate::CliError::from).and_then(|g| Ok(satake_embed(&rep, &g)?));
        match embedded {
            Ok(p) => points.push(Record { index, name, point: p.to_json(RANK_TOL) }),
            Err(e) => out.errors.push(ErrorRecord::new("satake", e).at(index)),
        }
    }
    out.summary.push(format!("{} points in dimension {}", points.len(), rep.dim()));
    let body = Body { representation: rep.functor().to_string(), dim: rep.dim(), support: rep.support()?, points };
    out.files.push(write_report(&cfg.output_path("satake.json"), cfg, &out.errors, body)?);
    Ok(out)
}
