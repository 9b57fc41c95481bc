//! `cartan`: batch `μ`, root gaps and `Ξ_θ` for θ = roots with a gap above `tol`.

use ano_cartan::{kak, kak_complex, mu_gaps, xi_from_kak, Group, KakTriple};
use ano_linalg::Mat;
use ano_roots::ThetaSet;
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{load_generators, read_matrices, rows_of, write_report, ErrorRecord, Outcome};
use crate::{CliError, Result};

#[derive(Debug, Serialize)]
struct FlagPart {
    root: usize,
    frame: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize)]
struct Record {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    mu: Vec<f64>,
    gaps: Vec<f64>,
    flag_frame: Vec<FlagPart>,
}

#[derive(Debug, Serialize)]
struct Body {
    group: String,
    records: Vec<Record>,
}

fn one(index: usize, name: Option<String>, t: KakTriple, group: &Group, tol: f64) -> Result<Record> {
    let rs = group.root_system()?;
    let gaps = mu_gaps(&t.mu, &rs)?;
    let theta = ThetaSet::new(rs.rank(), (0..rs.rank()).filter(|&i| gaps[i] > tol))?;
    let flag = xi_from_kak(&t, group, &rs, &theta, tol)?;
    let flag_frame = flag.parts.iter().map(|(r, f)| FlagPart { root: r + 1, frame: rows_of(f.columns()) }).collect();
    Ok(Record { index, name, mu: t.mu.values, gaps, flag_frame })
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let items: Vec<(Option<String>, ano_linalg::json::MatrixJson)> = match &cfg.input {
        Some(path) => read_matrices(path)?.into_iter().map(|e| (e.name().map(String::from), e.matrix().clone())).collect(),
        None => load_generators(&cfg.gens)?.to_specs().into_iter().map(|s| (Some(s.name), s.matrix)).collect(),
    };
    // Bare matrix files without a group default to GL_n.
    let group = match (cfg.gl, cfg.form, &cfg.input, items.first()) {
        (None, None, Some(_), Some((_, m))) => Group::Gl(m.rows),
        _ => cfg.group()?,
    };
    let mut out = Outcome::default();
    let mut records = Vec::new();
    for (index, (name, m)) in items.into_iter().enumerate() {
        let decomposed = match &group {
            Group::OnC(form) => m.to_complex().map_err(CliError::from).and_then(|g| Ok(kak_complex(&g, form)?)),
            _ => m.to_real().map_err(CliError::from).and_then(|g: Mat| Ok(kak(&g, &group)?)),
        };
        match decomposed.and_then(|t| one(index, name.clone(), t, &group, cfg.tol)) {
            Ok(r) => records.push(r),
            Err(e) => {
                let rec = ErrorRecord::new("cartan", e).at(index);
                out.errors.push(match &name {
                    Some(n) => rec.word(n),
                    None => rec,
                });
            }
        }
    }
    out.summary.push(format!("{} records, {} errors", records.len(), out.errors.len()));
    let body = Body { group: format!("{:?}", group.tag()), records };
    out.files.push(write_report(&cfg.output_path("cartan.json"), cfg, &out.errors, body)?);
    Ok(out)
}
