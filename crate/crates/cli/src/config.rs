//! Run configuration: defaults, then a `key = value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ano_cartan::Group;
use ano_linalg::{Field, WittForm};
use serde::Serialize;

use crate::error::CliError;
use crate::Result;

/// Output directory fallback when neither `out` nor the environment sets one.
pub const DEFAULT_OUT_DIR: &str = "anoctl-out";
pub const OUT_DIR_ENV: &str = "ANOCTL_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Cartan,
    Divergence,
    Limitset,
    Domain,
    Orbits,
    Table1,
    Satake,
    Gens,
}

impl FromStr for CommandKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cartan" => CommandKind::Cartan,
            "divergence" | "ball" => CommandKind::Divergence,
            "limitset" => CommandKind::Limitset,
            "domain" | "domain-check" => CommandKind::Domain,
            "orbits" => CommandKind::Orbits,
            "table1" => CommandKind::Table1,
            "satake" => CommandKind::Satake,
            "gens" => CommandKind::Gens,
            other => return Err(CliError::config(format!("unknown command `{other}`"))),
        })
    }
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CommandKind::Cartan => "cartan",
            CommandKind::Divergence => "divergence",
            CommandKind::Limitset => "limitset",
            CommandKind::Domain => "domain",
            CommandKind::Orbits => "orbits",
            CommandKind::Table1 => "table1",
            CommandKind::Satake => "satake",
            CommandKind::Gens => "gens",
        };
        f.write_str(s)
    }
}

/// `P,Q` or `P,Q,C`; the complex variant uses the form on `C^(P+Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormSpec {
    pub p: usize,
    pub q: usize,
    pub complex: bool,
}

impl FromStr for FormSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CliError::config(format!("form `{s}` is not P,Q[,C]"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let (p, q, complex) = match parts.as_slice() {
            [p, q] => (p, q, false),
            [p, q, c] if c.eq_ignore_ascii_case("c") => (p, q, true),
            [p, q, r] if r.eq_ignore_ascii_case("r") => (p, q, false),
            _ => return Err(bad()),
        };
        Ok(Self { p: p.parse().map_err(|_| bad())?, q: q.parse().map_err(|_| bad())?, complex })
    }
}

impl FormSpec {
    pub fn witt(&self) -> Result<WittForm> {
        Ok(if self.complex { WittForm::complex(self.p + self.q)? } else { WittForm::new(self.p, self.q, Field::Real)? })
    }

    pub fn group(&self) -> Result<Group> {
        Ok(if self.complex { Group::OnC(self.witt()?) } else { Group::Opq(self.witt()?) })
    }
}

/// Every tunable of every command. Fields not used by a command are ignored by it.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Defaults to `2,1`, the signature of the bundled generators.
    pub form: Option<FormSpec>,
    /// Uses `GL_n` instead of the orthogonal group of `form`.
    pub gl: Option<usize>,
    /// Generator file, or a bundled set name (`schottky`, `mixed`).
    pub gens: String,
    pub input: Option<PathBuf>,
    pub radius: usize,
    pub cap: usize,
    pub tol: f64,
    pub seed: u64,
    /// Simple root (1-based) of the sampled limit flags.
    pub root: usize,
    pub min_gap: f64,
    pub merge_tol: f64,
    pub dedup_tol: f64,
    /// Chart coordinates of the scatter, 0-based.
    pub chart: (usize, usize),
    /// Ball radius of the limit sample that defines the bad set (`domain`).
    pub sample_radius: usize,
    /// Interior points checked against the bad set.
    pub samples: usize,
    pub relation_points: usize,
    pub accumulation_tol: f64,
    pub coverage_trials: usize,
    pub core_points: usize,
    pub d_core: f64,
    pub expansion_c: f64,
    pub certificates: usize,
    /// Root system label such as `B2`, for `orbits`.
    pub system: Option<String>,
    /// 1-based labels of the support.
    pub support: Option<Vec<usize>>,
    pub rep: String,
    #[serde(skip)]
    pub out: PathBuf,
    #[serde(skip)]
    pub report: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        Self {
            command,
            form: None,
            gl: None,
            gens: "schottky".into(),
            input: None,
            radius: 6,
            cap: 100_000,
            tol: 1e-9,
            seed: 0,
            root: 1,
            min_gap: 1.0,
            merge_tol: ano_limits::DEFAULT_MERGE_TOL,
            dedup_tol: ano_words::DEFAULT_DEDUP_TOL,
            chart: (0, 1),
            sample_radius: 6,
            samples: 200,
            relation_points: 20,
            accumulation_tol: ano_domain::DEFAULT_ACCUMULATION_TOL,
            coverage_trials: 100,
            core_points: 8,
            d_core: 0.25,
            expansion_c: 2.0,
            certificates: 8,
            system: None,
            support: None,
            rep: "adjoint".into(),
            out: std::env::var_os(OUT_DIR_ENV).map_or_else(|| PathBuf::from(DEFAULT_OUT_DIR), PathBuf::from),
            report: None,
        }
    }

    /// Applies one setting; keys accept `-` or `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let key = key.trim().replace('-', "_");
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse().map_err(|_| CliError::config(format!("`{key}`: cannot parse `{v}`")))
        }
        match key.as_str() {
            "form" => self.form = Some(value.parse()?),
            "gl" => self.gl = Some(num(&key, value)?),
            "gens" => self.gens = value.into(),
            "input" => self.input = Some(value.into()),
            "radius" => self.radius = num(&key, value)?,
            "cap" => self.cap = num(&key, value)?,
            "tol" => self.tol = num(&key, value)?,
            "seed" => self.seed = num(&key, value)?,
            "root" => self.root = num(&key, value)?,
            "min_gap" => self.min_gap = num(&key, value)?,
            "merge_tol" => self.merge_tol = num(&key, value)?,
            "dedup_tol" => self.dedup_tol = num(&key, value)?,
            "chart" => {
                let (a, b) = value.split_once(',').ok_or_else(|| CliError::config("chart is `I,J`"))?;
                self.chart = (num(&key, a.trim())?, num(&key, b.trim())?);
            }
            "sample_radius" => self.sample_radius = num(&key, value)?,
            "samples" => self.samples = num(&key, value)?,
            "relation_points" => self.relation_points = num(&key, value)?,
            "accumulation_tol" => self.accumulation_tol = num(&key, value)?,
            "coverage_trials" => self.coverage_trials = num(&key, value)?,
            "core_points" => self.core_points = num(&key, value)?,
            "d_core" => self.d_core = num(&key, value)?,
            "c" | "expansion_c" => self.expansion_c = num(&key, value)?,
            "certificates" => self.certificates = num(&key, value)?,
            "system" => self.system = Some(value.into()),
            "support" => {
                self.support = Some(value.split(',').map(|s| num(&key, s.trim())).collect::<Result<_>>()?);
            }
            "rep" => self.rep = value.into(),
            "out" => self.out = value.into(),
            "report" => self.report = Some(value.into()),
            other => return Err(CliError::config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment.
    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("{}:{}: expected `key = value`", path.display(), no + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("tol", self.tol),
            ("min_gap", self.min_gap),
            ("merge_tol", self.merge_tol),
            ("dedup_tol", self.dedup_tol),
            ("accumulation_tol", self.accumulation_tol),
            ("d_core", self.d_core),
        ];
        if let Some((k, v)) = positive.iter().find(|(_, v)| !(*v > 0.0)) {
            return Err(CliError::config(format!("`{k}` must be positive, got {v}")));
        }
        if self.root == 0 {
            return Err(CliError::config("`root` is 1-based"));
        }
        if self.cap == 0 {
            return Err(CliError::config("`cap` must be positive"));
        }
        Ok(())
    }

    pub fn form_or_default(&self) -> FormSpec {
        self.form.unwrap_or(FormSpec { p: 2, q: 1, complex: false })
    }

    pub fn group(&self) -> Result<Group> {
        match self.gl {
            Some(n) => Ok(Group::Gl(n)),
            None => self.form_or_default().group(),
        }
    }

    /// Real Witt form, for the commands that need one.
    pub fn real_form(&self) -> Result<WittForm> {
        let f = self.form_or_default();
        if self.gl.is_some() || f.complex {
            return Err(CliError::config(format!("`{}` needs a real form P,Q", self.command)));
        }
        f.witt()
    }

    pub fn output_path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }
}
