//! `limitset`: sampled limit flags as CSV, a chart scatter as SVG, and
//! sample statistics with the transversality margin.

use ano_limits::svg::scatter_svg;
use ano_limits::{transversality_report, SampleStats, TransversalityReport, DEFAULT_PAIR_FLOOR};
use ano_linalg::Strategy;
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{write_csv, write_report, write_text, Outcome};
use crate::Result;

#[derive(Debug, Serialize)]
struct Body {
    ball_size: usize,
    root: usize,
    points: usize,
    stats: SampleStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    transversality: Option<TransversalityReport>,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let ball = super::ball(cfg, &mut out.errors)?;
    let sample = super::limit_sample(cfg, &ball)?;
    let group = cfg.group()?;
    let form = group.form().filter(|_| cfg.gl.is_none()).cloned();

    let (n, k) = sample.points.first().map_or((0, 0), |p| (p.frame.ambient_dim(), p.frame.k()));
    let mut header = vec!["index".to_string(), "word".into(), "word_length".into(), "gap".into()];
    for i in 0..n {
        for j in 0..k {
            header.push(format!("f{i}_{j}"));
        }
    }
    let rows = sample.points.iter().enumerate().map(|(i, p)| {
        let mut r = vec![i.to_string(), p.word.clone(), p.word_length.to_string(), format!("{:e}", p.gap)];
        let c = p.frame.columns();
        for a in 0..c.nrows() {
            for b in 0..c.ncols() {
                r.push(format!("{:e}", c[(a, b)]));
            }
        }
        r
    });
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    out.files.push(write_csv(&cfg.output_path("limitset.csv"), &header_refs, rows)?);
    out.files.push(write_text(&cfg.output_path("limitset.svg"), &scatter_svg(&sample, form.as_ref(), cfg.chart)?)?);

    let transversality = form.as_ref().map(|f| transversality_report(&sample, f, DEFAULT_PAIR_FLOOR, Strategy::default()));
    let stats = sample.stats(Strategy::default());
    out.summary.push(format!("{} limit points from {} elements", sample.len(), ball.len()));
    if let Some(t) = &transversality {
        out.summary.push(format!("transversality margin {:.3e}", t.margin));
    }
    let body = Body { ball_size: ball.len(), root: cfg.root, points: sample.len(), stats, transversality };
    out.files.push(write_report(&cfg.output_path("limitset.json"), cfg, &out.errors, body)?);
    Ok(out)
}
