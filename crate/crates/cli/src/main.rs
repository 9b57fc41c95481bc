use std::path::PathBuf;
use std::process::ExitCode;

use ano_cli::{run, CommandKind, RunConfig};
use clap::Parser;

/// Cartan projections, limit sets, domains and Satake orbits from the command line.
#[derive(Debug, Parser)]
#[command(name = "anoctl", version)]
struct Args {
    /// cartan | divergence (ball) | limitset | domain (domain-check) | orbits | table1 | satake | gens
    command: String,
    /// `key = value` file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// P,Q or P,Q,C
    #[arg(long)]
    form: Option<String>,
    /// Use GL_N instead of an orthogonal group.
    #[arg(long)]
    gl: Option<String>,
    /// Generator file or bundled set (schottky, mixed).
    #[arg(long)]
    gens: Option<String>,
    /// JSON list of matrices (cartan, satake).
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    radius: Option<String>,
    #[arg(long)]
    cap: Option<String>,
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Output directory (else $ANOCTL_OUT_DIR, else ./anoctl-out).
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    samples: Option<String>,
    /// Report path for domain-check.
    #[arg(long)]
    report: Option<String>,
    /// Root system label for orbits, e.g. B2.
    #[arg(long)]
    system: Option<String>,
    /// Comma-separated 1-based support labels for orbits.
    #[arg(long)]
    support: Option<String>,
    /// identity | exteriorK | adjoint, joined with `+`.
    #[arg(long)]
    rep: Option<String>,
    /// Any other key, as KEY=VALUE; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

fn config(args: &Args) -> ano_cli::Result<RunConfig> {
    let mut cfg = RunConfig::new(args.command.parse::<CommandKind>()?);
    if let Some(path) = &args.config {
        cfg.load_file(path)?;
    }
    let flags = [
        ("form", &args.form),
        ("gl", &args.gl),
        ("gens", &args.gens),
        ("input", &args.input),
        ("radius", &args.radius),
        ("cap", &args.cap),
        ("tol", &args.tol),
        ("seed", &args.seed),
        ("out", &args.out),
        ("samples", &args.samples),
        ("report", &args.report),
        ("system", &args.system),
        ("support", &args.support),
        ("rep", &args.rep),
    ];
    for (k, v) in flags {
        if let Some(v) = v {
            cfg.set(k, v)?;
        }
    }
    for kv in &args.set {
        let (k, v) = kv.split_once('=').ok_or_else(|| ano_cli::CliError::config(format!("--set `{kv}` is not KEY=VALUE")))?;
        cfg.set(k, v)?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = config(&args).and_then(|cfg| run(&cfg));
    match outcome {
        Ok(o) => {
            for line in &o.summary {
                println!("{line}");
            }
            for e in &o.errors {
                eprintln!("error [{}]: {}", e.stage, e.message);
            }
            for f in &o.files {
                println!("wrote {}", f.display());
            }
            ExitCode::from(o.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("anoctl: {e}");
            ExitCode::from(2)
        }
    }
}
