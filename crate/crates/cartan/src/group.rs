//! Group descriptors and Cartan projection values.

use ano_linalg::{Field, WittForm};
use ano_roots::{build_root_system, RootSystem, RootType};
use serde::{Deserialize, Serialize};

use crate::{CartanError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "opq")]
    Opq,
    #[serde(rename = "onC")]
    OnC,
}

impl std::fmt::Display for GroupTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GroupTag::Gl => "gl",
            GroupTag::Opq => "opq",
            GroupTag::OnC => "onC",
        })
    }
}

/// A concrete matrix group: `GL_n(R)`, `O(p,q)` or `O(n,C)` for a Witt form.
#[derive(Debug, Clone, PartialEq)]
pub enum Group {
    Gl(usize),
    Opq(WittForm),
    OnC(WittForm),
}

impl Group {
    pub fn orthogonal(p: usize, q: usize) -> Result<Self> {
        Ok(Group::Opq(WittForm::real(p, q)?))
    }

    pub fn complex_orthogonal(n: usize) -> Result<Self> {
        Ok(Group::OnC(WittForm::complex(n)?))
    }

    pub fn tag(&self) -> GroupTag {
        match self {
            Group::Gl(_) => GroupTag::Gl,
            Group::Opq(_) => GroupTag::Opq,
            Group::OnC(_) => GroupTag::OnC,
        }
    }

    /// Matrix size (complex size for `O(n,C)`).
    pub fn dim(&self) -> usize {
        match self {
            Group::Gl(n) => *n,
            Group::Opq(f) | Group::OnC(f) => f.dim(),
        }
    }

    pub fn form(&self) -> Option<&WittForm> {
        match self {
            Group::Gl(_) => None,
            Group::Opq(f) | Group::OnC(f) => Some(f),
        }
    }

    /// Length of the Cartan projection vector.
    pub fn mu_len(&self) -> usize {
        match self {
            Group::Gl(n) => *n,
            Group::Opq(f) => f.q(),
            Group::OnC(f) => f.dim() / 2,
        }
    }

    /// The restricted root system: `A_{n-1}`, `B_q` or `D_q` for `O(p,q)`,
    /// `B_m` or `D_m` for `O(n,C)`.
    pub fn root_system(&self) -> Result<RootSystem> {
        let unsupported = || CartanError::Unsupported(format!("no restricted root system for {self:?}"));
        let (t, r) = match self {
            Group::Gl(n) if *n >= 2 => (RootType::A, n - 1),
            Group::Opq(f) if f.q() >= 1 && f.p() > f.q() => (RootType::B, f.q()),
            Group::Opq(f) if f.q() >= 2 && f.p() == f.q() => (RootType::D, f.q()),
            Group::OnC(f) if f.field() == Field::Complex && f.dim() >= 3 && f.dim() % 2 == 1 => {
                (RootType::B, f.dim() / 2)
            }
            Group::OnC(f) if f.field() == Field::Complex && f.dim() >= 4 => (RootType::D, f.dim() / 2),
            _ => return Err(unsupported()),
        };
        Ok(build_root_system(t, r)?)
    }
}

/// A point of the closed positive Weyl chamber.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuVector {
    pub group: GroupTag,
    pub values: Vec<f64>,
}

impl MuVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Euclidean norm of the chamber vector.
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Pairings `⟨α, μ⟩` for every simple root, in simple-root order.
///
/// Uses the ε-coordinates of the root system, so only classical types apply.
pub fn mu_gaps(mu: &MuVector, rs: &RootSystem) -> Result<Vec<f64>> {
    let incompatible =
        || CartanError::Incompatible { system: rs.label(), group: mu.group.to_string(), len: mu.len() };
    let eps = rs.epsilon().ok_or_else(incompatible)?;
    if eps.iter().any(|row| row.len() != mu.len()) {
        return Err(incompatible());
    }
    Ok(eps
        .iter()
        .map(|row| row.iter().zip(&mu.values).map(|(&c, &m)| c as f64 * m).sum())
        .collect())
}
