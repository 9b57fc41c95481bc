//! `table1`: the simple-root/highest-root table re-derived from the pairings.

use std::fmt::Write;

use ano_roots::{table1_all, Table1Check};
use serde::Serialize;

use crate::config::RunConfig;
use crate::output::{write_report, write_text, Outcome};
use crate::Result;

#[derive(Debug, Serialize)]
struct Body {
    rows: Vec<Table1Check>,
    verified: usize,
    failed: usize,
}

fn labels(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|i| format!("α{i}")).collect();
    format!("{{{}}}", s.join(","))
}

pub fn render(rows: &[Table1Check]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<5} {:<5} {:<26} {:<12} {:<12} {}", "type", "α_G", "χ_G", "{α_G,α_G⋆}", "computed", "check");
    for r in rows {
        let chi: Vec<String> = r.chi_g.iter().map(i64::to_string).collect();
        let _ = writeln!(
            s,
            "{:<5} {:<5} {:<26} {:<12} {:<12} {}",
            r.label,
            format!("α{}", r.alpha_g),
            format!("({})", chi.join(",")),
            labels(&r.expected),
            labels(&r.computed),
            if r.verified { "verified" } else { "failed" }
        );
    }
    s
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let mut out = Outcome::default();
    let rows = table1_all()?;
    let text = render(&rows);
    out.summary.extend(text.lines().map(String::from));
    out.files.push(write_text(&cfg.output_path("table1.txt"), &text)?);
    let verified = rows.iter().filter(|r| r.verified).count();
    let body = Body { failed: rows.len() - verified, verified, rows };
    out.files.push(write_report(&cfg.output_path("table1.json"), cfg, &out.errors, body)?);
    Ok(out)
}
