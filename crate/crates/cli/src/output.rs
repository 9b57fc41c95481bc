//! Report envelopes, error records and file emission.

use std::path::{Path, PathBuf};

use ano_linalg::Mat;
use ano_words::{Generators, GeneratorSpec};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// A failure attached to one input item; the run continues past it.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    pub stage: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(stage: &str, message: impl ToString) -> Self {
        Self { index: None, word: None, stage: stage.into(), message: message.to_string() }
    }

    pub fn at(mut self, index: usize) -> Self {
        self.index = Some(index);
        self
    }

    pub fn word(mut self, word: &str) -> Self {
        self.word = Some(word.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub config: &'a RunConfig,
    pub errors: &'a [ErrorRecord],
    #[serde(flatten)]
    pub body: T,
}

/// What a command produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub files: Vec<PathBuf>,
    pub errors: Vec<ErrorRecord>,
    /// Human-readable lines for stdout.
    pub summary: Vec<String>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.errors.is_empty())
    }
}

fn ensure_parent(path: &Path) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
    }
    Ok(())
}

pub fn write_text(path: &Path, text: &str) -> Result<PathBuf> {
    ensure_parent(path)?;
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(path.into())
}

pub fn write_report<T: Serialize>(path: &Path, cfg: &RunConfig, errors: &[ErrorRecord], body: T) -> Result<PathBuf> {
    let env = Envelope { schema_version: SCHEMA_VERSION, command: cfg.command.to_string(), config: cfg, errors, body };
    let mut text = serde_json::to_string_pretty(&env)?;
    text.push('\n');
    write_text(path, &text)
}

pub fn write_csv<R: Serialize>(path: &Path, header: &[&str], rows: impl IntoIterator<Item = R>) -> Result<PathBuf> {
    ensure_parent(path)?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_path(path)?;
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|source| CliError::Io { path: path.into(), source })?;
    Ok(path.into())
}

pub fn rows_of(m: &Mat) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

/// Either a bare matrix or a named one.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum MatrixEntry {
    Named(GeneratorSpec),
    Bare(ano_linalg::json::MatrixJson),
}

impl MatrixEntry {
    pub fn name(&self) -> Option<&str> {
        match self {
            MatrixEntry::Named(s) => Some(&s.name),
            MatrixEntry::Bare(_) => None,
        }
    }

    pub fn matrix(&self) -> &ano_linalg::json::MatrixJson {
        match self {
            MatrixEntry::Named(s) => &s.matrix,
            MatrixEntry::Bare(m) => m,
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

pub fn read_matrices(path: &Path) -> Result<Vec<MatrixEntry>> {
    read_json(path)
}

/// A generator file path, or the name of a bundled set.
pub fn load_generators(spec: &str) -> Result<Generators> {
    let path = Path::new(spec);
    if path.exists() {
        let specs: Vec<GeneratorSpec> = read_json(path)?;
        return Ok(Generators::from_specs(&specs)?);
    }
    match ano_words::bundled::by_name(spec) {
        Some(g) => Ok(g?),
        None => Err(CliError::config(format!("`{spec}` is neither a file nor a bundled generator set"))),
    }
}
