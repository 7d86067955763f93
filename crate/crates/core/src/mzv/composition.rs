//! Index compositions (s1, ..., sk) of multiple zeta values.

use std::fmt;

use crate::error::{Error, Result};

/// A nonempty sequence of positive integers. Admissible (the MZV series
/// converges) iff the first part is >= 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::DegenerateInput("empty composition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::DegenerateInput("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.parts[0] >= 2
    }

    /// Parse "2,1" or "(2,1)".
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<u32>> = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad composition part `{x}`")))
            })
            .collect();
        Composition::new(parts?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&[u32]> for Composition {
    fn from(parts: &[u32]) -> Self {
        Composition::new(parts.to_vec()).expect("invalid composition literal")
    }
}

/// All admissible compositions of the given weight in lexicographic order;
/// there are exactly 2^(weight-2) of them.
pub fn admissible_compositions(weight: u32) -> Result<Vec<Composition>> {
    if weight < 2 {
        return Err(Error::DomainError(format!(
            "no admissible compositions of weight {weight} (need weight >= 2)"
        )));
    }
    let mut out = Vec::with_capacity(1 << (weight - 2).min(30));
    for first in 2..=weight {
        if first == weight {
            out.push(Composition::new(vec![first]).unwrap());
        } else {
            for tail in any_compositions(weight - first) {
                let mut parts = Vec::with_capacity(tail.len() + 1);
                parts.push(first);
                parts.extend(tail);
                out.push(Composition::new(parts).unwrap());
            }
        }
    }
    Ok(out)
}

/// All compositions (first part >= 1) of m > 0, lexicographic.
fn any_compositions(m: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=m {
        for tail in any_compositions(m - first) {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(first);
            v.extend(tail);
            out.push(v);
        }
    }
    out
}
