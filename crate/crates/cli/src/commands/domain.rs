//! `domain` (alias `domain-check`): bad-set membership of interior points,
//! the dynamical-relation scan, the orbit-coverage curve and expansion
//! certificates at sampled limit flags.

use ano_domain::{
    dynamical_relation_scan, expansion_certificate, in_bad_set, orbit_coverage, outside_theorem_hypotheses,
    ray_prefixes, sample_domain_points, BadSetVariant, CoverageConfig, CoveragePoint, DomainError,
    ExpansionCertificate, ExpansionConfig, RelationFlag, RelationScanConfig,
};
use ano_linalg::Strategy;
use ano_words::enumerate_ball;
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{write_report, ErrorRecord, Outcome};
use crate::Result;

/// Flags written to the report; the count is always exact.
const MAX_LISTED_FLAGS: usize = 200;

#[derive(Debug, Serialize)]
struct Witness {
    point: usize,
    limit_point: usize,
}

#[derive(Debug, Serialize)]
struct BadSetHits {
    variant: BadSetVariant,
    samples: usize,
    hits: usize,
    witnesses: Vec<Witness>,
}

#[derive(Debug, Serialize)]
struct RelationFlags {
    points: usize,
    tail_start: usize,
    pairs_checked: usize,
    residual: f64,
    count: usize,
    listed: Vec<RelationFlag>,
}

#[derive(Debug, Serialize)]
struct CertificateEntry {
    limit_point: usize,
    word: String,
    certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<ExpansionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    best_factor: Option<f64>,
}

#[derive(Debug, Serialize)]
struct Body {
    form: (usize, usize),
    hypothesis_tag: &'static str,
    ball_size: usize,
    limit_points: usize,
    bad_set_hits: BadSetHits,
    relation_flags: RelationFlags,
    coverage_curve: Vec<CoveragePoint>,
    d_core: f64,
    expansion_certificates: Vec<CertificateEntry>,
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let form = cfg.real_form()?;
    let group = cfg.group()?;
    let ball = super::ball(cfg, &mut out.errors)?;
    let gens = ball.generators.clone();
    let sample_ball = match enumerate_ball(&gens, cfg.sample_radius, cfg.dedup_tol, cfg.cap, Strategy::default()) {
        Ok(b) => b,
        Err(ano_words::WordsError::CapExceeded { cap, radius, partial }) => {
            out.errors.push(ErrorRecord::new("sample_ball", format!("cap {cap} reached at radius {radius}")));
            *partial
        }
        Err(e) => return Err(e.into()),
    };
    let sample = super::limit_sample(cfg, &sample_ball)?;
    let tag = if outside_theorem_hypotheses(&form, cfg.root) {
        "outside theorem hypotheses"
    } else {
        "within theorem hypotheses"
    };
    let variant = if cfg.root == 1 { BadSetVariant::Contain1 } else { BadSetVariant::Intersect(cfg.root) };

    let interior = sample_domain_points(&form, cfg.samples, cfg.seed, cfg.tol);
    let mut hits = BadSetHits { variant, samples: interior.len(), hits: 0, witnesses: Vec::new() };
    for (i, p) in interior.iter().enumerate() {
        match in_bad_set(p, &sample, variant, cfg.tol) {
            Ok(h) if h.hit => {
                hits.hits += 1;
                hits.witnesses.push(Witness { point: i, limit_point: h.witness.unwrap_or(usize::MAX) });
            }
            Ok(_) => {}
            Err(e) => out.errors.push(ErrorRecord::new("bad_set", e).at(i)),
        }
    }

    let points = sample_domain_points(&form, cfg.relation_points, cfg.seed.wrapping_add(1), cfg.tol);
    let scan_cfg = RelationScanConfig { accumulation_tol: cfg.accumulation_tol, ..RelationScanConfig::default() };
    let scan = dynamical_relation_scan(&points, &ball, &sample, &group, &scan_cfg, Strategy::default())?;
    let relation_flags = RelationFlags {
        points: points.len(),
        tail_start: scan.tail_start,
        pairs_checked: scan.pairs_checked,
        residual: scan.residual,
        count: scan.flags.len(),
        listed: scan.flags.into_iter().take(MAX_LISTED_FLAGS).collect(),
    };

    let core = sample_domain_points(&form, cfg.core_points, cfg.seed.wrapping_add(2), cfg.tol);
    let cov_cfg = CoverageConfig {
        trials: cfg.coverage_trials,
        d_core: cfg.d_core,
        seed: cfg.seed.wrapping_add(3),
        ..CoverageConfig::default()
    };
    let coverage_curve = orbit_coverage(&core, &ball, &sample, &form, &cov_cfg, Strategy::default())?;

    let mut certs = Vec::new();
    for (i, p) in sample.points.iter().enumerate().take(cfg.certificates) {
        let letters = gens.parse_word(&p.word)?;
        let ecfg = ExpansionConfig::new(cfg.expansion_c, cfg.seed.wrapping_add(4));
        let mut entry =
            CertificateEntry { limit_point: i, word: p.word.clone(), certified: false, certificate: None, best_factor: None };
        match expansion_certificate(&p.frame, &ray_prefixes(&letters), &gens, &form, &ecfg) {
            Ok(c) => {
                entry.certified = true;
                entry.best_factor = Some(c.factor);
                entry.certificate = Some(c);
            }
            Err(DomainError::NoCertificate { best, .. }) => entry.best_factor = Some(best),
            Err(e) => out.errors.push(ErrorRecord::new("expansion", e).at(i).word(&p.word)),
        }
        certs.push(entry);
    }

    out.summary.push(format!("{tag}; ball {} elements, {} limit points", ball.len(), sample.len()));
    out.summary.push(format!("bad-set hits: {}/{}", hits.hits, hits.samples));
    out.summary.push(format!(
        "relation flags: {} over {} pairs (residual {:.3e})",
        relation_flags.count, relation_flags.pairs_checked, relation_flags.residual
    ));
    out.summary.push(format!(
        "expansion certificates: {}/{}",
        certs.iter().filter(|c| c.certified).count(),
        certs.len()
    ));
    let body = Body {
        form: (form.p(), form.q()),
        hypothesis_tag: tag,
        ball_size: ball.len(),
        limit_points: sample.len(),
        bad_set_hits: hits,
        relation_flags,
        coverage_curve,
        d_core: cfg.d_core,
        expansion_certificates: certs,
    };
    let path = cfg.report.clone().unwrap_or_else(|| cfg.output_path("domain.json"));
    out.files.push(write_report(&path, cfg, &out.errors, body)?);
    Ok(out)
}
