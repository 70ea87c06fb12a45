//! Face-cycle types and semi-equivelar classification.
//!
//! A type string `[p1^n1,...,pk^nk]` records the cyclic run-length form of the
//! face sizes around a vertex. Rotations and the reversal denote the same type,
//! so the canonical form is the lexicographically least expanded size sequence
//! over all rotations of the sequence and of its reversal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::map::{MapError, PolyhedralMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeStringError {
    #[error("face size {0} is smaller than 3")]
    SizeTooSmall(u32),
    #[error("a face-cycle needs at least 3 faces, got {0}")]
    TooShort(usize),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("cannot parse {0:?} as a type string")]
    Unparseable(String),
}

/// Canonical cyclic run-length type `[p1^n1,...,pk^nk]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeString {
    runs: Vec<(u32, u32)>,
}

impl TypeString {
    /// Canonicalize a cyclic sequence of face sizes.
    pub fn canonical(sizes: &[u32]) -> Result<Self, TypeStringError> {
        if sizes.len() < 3 {
            return Err(TypeStringError::TooShort(sizes.len()));
        }
        if let Some(&bad) = sizes.iter().find(|&&p| p < 3) {
            return Err(TypeStringError::SizeTooSmall(bad));
        }
        let mut best: Option<Vec<u32>> = None;
        let rev: Vec<u32> = sizes.iter().rev().copied().collect();
        for seq in [sizes, rev.as_slice()] {
            for r in 0..seq.len() {
                let mut cand: Vec<u32> = seq[r..].to_vec();
                cand.extend_from_slice(&seq[..r]);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        let expanded = best.unwrap();
        // the least rotation of a non-constant sequence never wraps a run
        let mut runs: Vec<(u32, u32)> = Vec::new();
        for &p in &expanded {
            match runs.last_mut() {
                Some((q, n)) if *q == p => *n += 1,
                _ => runs.push((p, 1)),
            }
        }
        Ok(TypeString { runs })
    }

    /// Runs `(p_i, n_i)` of the canonical form.
    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    /// The expanded size sequence (canonical rotation).
    pub fn expanded(&self) -> Vec<u32> {
        self.runs
            .iter()
            .flat_map(|&(p, n)| std::iter::repeat_n(p, n as usize))
            .collect()
    }

    /// Vertex degree: total number of faces in the cycle.
    pub fn degree(&self) -> u32 {
        self.runs.iter().map(|&(_, n)| n).sum()
    }

    /// Number of runs.
    pub fn k(&self) -> usize {
        self.runs.len()
    }
}

impl Ord for TypeString {
    fn cmp(&self, other: &Self) -> Ordering {
        self.expanded().cmp(&other.expanded())
    }
}

impl PartialOrd for TypeString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TypeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (p, n)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}^{n}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for TypeString {
    type Err = TypeStringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| TypeStringError::Unparseable(s.to_string()))?;
        let mut sizes = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            let (p, n) = match part.split_once('^') {
                Some((p, n)) => (
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| TypeStringError::Unparseable(s.to_string()))?,
                    n.trim()
                        .parse::<u32>()
                        .map_err(|_| TypeStringError::Unparseable(s.to_string()))?,
                ),
                None => (
                    part.parse::<u32>()
                        .map_err(|_| TypeStringError::Unparseable(s.to_string()))?,
                    1,
                ),
            };
            if n == 0 {
                return Err(TypeStringError::ZeroMultiplicity);
            }
            sizes.extend(std::iter::repeat_n(p, n as usize));
        }
        TypeString::canonical(&sizes)
    }
}

/// Verdict of `classify`: either the common type, or two vertices whose
/// face-cycle types differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub semi_equivelar: bool,
    pub type_string: Option<TypeString>,
    pub witness: Option<(u32, u32)>,
}

/// The canonical face-cycle type at one vertex.
pub fn face_cycle_type(map: &PolyhedralMap, v: u32) -> Result<TypeString, MapError> {
    let link = map.vertex_link(v)?;
    let sizes: Vec<u32> = link.iter().map(|&(_, sz)| sz as u32).collect();
    // a validated map always has degree >= 3 and face sizes >= 3
    Ok(TypeString::canonical(&sizes).expect("valid map produces a valid face-cycle"))
}

/// Decide semi-equivelarity: all vertices share one face-cycle type.
pub fn classify(map: &PolyhedralMap) -> Classification {
    let ids = map.vertex_ids();
    let first = face_cycle_type(map, ids[0]).unwrap();
    for &v in &ids[1..] {
        let t = face_cycle_type(map, v).unwrap();
        if t != first {
            return Classification {
                semi_equivelar: false,
                type_string: None,
                witness: Some((ids[0], v)),
            };
        }
    }
    Classification {
        semi_equivelar: true,
        type_string: Some(first),
        witness: None,
    }
}
