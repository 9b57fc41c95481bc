use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Result, RootsError};

/// A subset of the simple roots, stored by 0-based index and displayed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaSet {
    rank: usize,
    members: BTreeSet<usize>,
}

impl ThetaSet {
    pub fn new(rank: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i >= rank) {
            return Err(RootsError::IndexOutOfRange { index: bad + 1, rank });
        }
        Ok(Self { rank, members })
    }

    /// Builds from 1-based labels as written in the literature.
    pub fn from_labels(rank: usize, labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Vec::new();
        for l in labels {
            if l == 0 || l > rank {
                return Err(RootsError::IndexOutOfRange { index: l, rank });
            }
            v.push(l - 1);
        }
        Self::new(rank, v)
    }

    pub fn empty(rank: usize) -> Self {
        Self { rank, members: BTreeSet::new() }
    }

    pub fn full(rank: usize) -> Self {
        Self { rank, members: (0..rank).collect() }
    }

    pub(crate) fn from_mask(rank: usize, mask: u32) -> Self {
        Self { rank, members: (0..rank).filter(|i| mask >> i & 1 == 1).collect() }
    }

    pub(crate) fn mask(&self) -> u32 {
        self.members.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
    pub fn labels(&self) -> Vec<usize> {
        self.members.iter().map(|i| i + 1).collect()
    }
    pub fn is_subset(&self, other: &ThetaSet) -> bool {
        self.members.is_subset(&other.members)
    }
    pub fn complement(&self) -> ThetaSet {
        Self { rank: self.rank, members: (0..self.rank).filter(|i| !self.members.contains(i)).collect() }
    }
    pub fn intersection(&self, other: &ThetaSet) -> ThetaSet {
        Self { rank: self.rank, members: self.members.intersection(&other.members).copied().collect() }
    }
    pub fn union(&self, other: &ThetaSet) -> ThetaSet {
        Self { rank: self.rank, members: self.members.union(&other.members).copied().collect() }
    }
}

impl fmt::Display for ThetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.members.iter().map(|i| format!("α{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for ThetaSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}
