//! `gens`: writes a generator set (bundled or from a file) as a generator file.

use crate::config::RunConfig;
use crate::output::{load_generators, write_text, Outcome};
use crate::Result;

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let gens = load_generators(&cfg.gens)?;
    let mut text = serde_json::to_string_pretty(&gens.to_specs())?;
    text.push('\n');
    let mut out = Outcome::default();
    out.files.push(write_text(&cfg.report.clone().unwrap_or_else(|| cfg.output_path("gens.json")), &text)?);
    out.summary.push(format!("{} generators of size {}", gens.len(), gens.dim()));
    Ok(out)
}
