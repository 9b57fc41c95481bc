//! Generators, letters and words.

use ano_linalg::json::MatrixJson;
use ano_linalg::Mat;
use serde::{Deserialize, Serialize};

use crate::{Result, WordsError};

/// Letter `2i` is generator `i`, letter `2i + 1` its inverse.
pub type Letter = usize;

pub fn inverse_letter(l: Letter) -> Letter {
    l ^ 1
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub name: String,
    pub matrix: Mat,
    pub inverse: Mat,
}

/// Serialized generator: `{"name": .., "matrix": {"rows", "cols", "data"}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub matrix: MatrixJson,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generators {
    gens: Vec<Generator>,
    dim: usize,
}

impl Generators {
    pub fn new(named: Vec<(String, Mat)>) -> Result<Self> {
        let dim = named.first().ok_or(WordsError::NoGenerators)?.1.nrows();
        let mut gens = Vec::with_capacity(named.len());
        for (name, m) in named {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(WordsError::Shape { name, expected: dim, rows: m.nrows(), cols: m.ncols() });
            }
            if gens.iter().any(|g: &Generator| g.name == name) || name.is_empty() || name.contains(['.', '^']) {
                return Err(WordsError::DuplicateName(name));
            }
            let inverse = m.clone().try_inverse().ok_or_else(|| WordsError::Singular { name: name.clone() })?;
            gens.push(Generator { name, matrix: m, inverse });
        }
        Ok(Self { gens, dim })
    }

    pub fn from_specs(specs: &[GeneratorSpec]) -> Result<Self> {
        let named = specs
            .iter()
            .map(|s| Ok((s.name.clone(), s.matrix.to_real()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(named)
    }

    pub fn to_specs(&self) -> Vec<GeneratorSpec> {
        self.gens
            .iter()
            .map(|g| GeneratorSpec { name: g.name.clone(), matrix: MatrixJson::from_real(&g.matrix) })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn letter_count(&self) -> usize {
        2 * self.gens.len()
    }

    pub fn letter_matrix(&self, l: Letter) -> &Mat {
        let g = &self.gens[l / 2];
        if l % 2 == 0 {
            &g.matrix
        } else {
            &g.inverse
        }
    }

    pub fn letter_name(&self, l: Letter) -> String {
        let g = &self.gens[l / 2];
        if l % 2 == 0 {
            g.name.clone()
        } else {
            format!("{}^-1", g.name)
        }
    }

    /// Words are names joined by `.`, inverses written `name^-1`, the empty word `1`.
    pub fn format_word(&self, letters: &[Letter]) -> String {
        if letters.is_empty() {
            return "1".to_string();
        }
        letters.iter().map(|&l| self.letter_name(l)).collect::<Vec<_>>().join(".")
    }

    pub fn parse_word(&self, s: &str) -> Result<Vec<Letter>> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Vec::new());
        }
        s.split('.')
            .map(|tok| {
                let (name, inv) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, 1),
                    None => (tok, 0),
                };
                self.gens
                    .iter()
                    .position(|g| g.name == name)
                    .map(|i| 2 * i + inv)
                    .ok_or_else(|| WordsError::UnknownLetter(tok.to_string()))
            })
            .collect()
    }

    pub fn evaluate(&self, letters: &[Letter]) -> Mat {
        letters.iter().fold(Mat::identity(self.dim, self.dim), |acc, &l| acc * self.letter_matrix(l))
    }

    /// Conjugates every generator by `h`: `g ↦ h·g·h⁻¹`.
    pub fn conjugated(&self, h: &Mat) -> Result<Self> {
        let hi = h.clone().try_inverse().ok_or_else(|| WordsError::Singular { name: "conjugator".into() })?;
        Self::new(self.gens.iter().map(|g| (g.name.clone(), h * &g.matrix * &hi)).collect())
    }
}

pub fn inverse_word(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&l| inverse_letter(l)).collect()
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[1] != inverse_letter(w[0]))
}
