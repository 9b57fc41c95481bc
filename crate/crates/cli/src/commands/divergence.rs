//! `divergence` (alias `ball`): minimal root gaps per sphere, with growth fits.

use ano_linalg::Strategy;
use ano_words::{divergence_profile, GrowthFit};
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{write_csv, write_report, Outcome};
use crate::Result;

#[derive(Debug, Serialize)]
struct Fit {
    root: usize,
    #[serde(flatten)]
    fit: GrowthFit,
}

#[derive(Debug, Serialize)]
struct Body {
    ball_size: usize,
    truncated: bool,
    root_system: String,
    fits: Vec<Fit>,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let ball = super::ball(cfg, &mut out.errors)?;
    let group = cfg.group()?;
    let profile = divergence_profile(&ball, &group, Strategy::default())?;
    let rank = group.root_system()?.rank();
    let fits: Vec<Fit> = (0..rank).map(|r| Fit { root: r + 1, fit: profile.fit(r) }).collect();
    for f in &fits {
        out.summary.push(format!("α{}: slope {:.4} ({:?})", f.root, f.fit.slope, f.fit.shape));
    }
    out.files.push(write_csv(
        &cfg.output_path("divergence.csv"),
        &["radius", "root", "min_gap", "word"],
        profile.to_csv_rows(),
    )?);
    let body = Body { ball_size: ball.len(), truncated: ball.truncated, root_system: profile.root_system.clone(), fits };
    out.files.push(write_report(&cfg.output_path("divergence.json"), cfg, &out.errors, body)?);
    Ok(out)
}
