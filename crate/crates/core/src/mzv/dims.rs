//! Finite double-shuffle relation matrices, the Zagier sequence d_s, and
//! the per-weight dimension bound table.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

use super::composition::{Composition, admissible_compositions};
use super::product::{shuffle_compositions, stuffle};

/// Matrix of finite double-shuffle relations at the given weight: one row
/// per unordered pair (u, v) of admissible compositions with |u| + |v| =
/// weight, expressing shuffle(u,v) - stuffle(u,v) in the lexicographic
/// admissible-composition basis. Both factors are admissible, so every
/// term stays admissible and no rows need exclusion.
///
/// Extension point, deliberately not implemented: the regularized double
/// shuffle system (one factor allowed to start with 1, with shuffle- and
/// stuffle-regularized values), which conjecturally attains the d_s bound
/// exactly. This function generates the finite subsystem only; whether its
/// rank matches d_s at a given weight is reported as data by
/// [`dimension_table`], never asserted.
pub fn double_shuffle_relations(weight: u32) -> Result<RationalMatrix> {
    if weight < 2 {
        return Err(Error::DomainError("weight must be >= 2".into()));
    }
    let basis = admissible_compositions(weight)?;
    let index: std::collections::BTreeMap<&Composition, usize> =
        basis.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for wu in 2..=(weight / 2) {
        let wv = weight - wu;
        if wv < 2 {
            continue;
        }
        let us = admissible_compositions(wu)?;
        let vs = admissible_compositions(wv)?;
        for (i, u) in us.iter().enumerate() {
            for (j, v) in vs.iter().enumerate() {
                if wu == wv && j < i {
                    continue; // unordered pairs once
                }
                let diff = shuffle_compositions(u, v)?.sub(&stuffle(u, v));
                let mut row = vec![Rational::zero(); basis.len()];
                let mut nonzero = false;
                for (c, coeff) in diff.iter() {
                    let k = *index
                        .get(c)
                        .expect("double-shuffle term outside the weight basis");
                    row[k] = coeff.clone();
                    nonzero = true;
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return RationalMatrix::new(0, basis.len(), vec![]);
    }
    RationalMatrix::from_rows(rows)
}

/// Zagier's d_s: Taylor coefficients of 1/(1 - x^2 - x^3), via the
/// recurrence d_0 = 1, d_1 = 0, d_2 = 1, d_s = d_{s-2} + d_{s-3}.
pub fn zagier_d(s: i64) -> Result<u64> {
    if s < 0 {
        return Err(Error::DomainError("zagier_d needs s >= 0".into()));
    }
    let mut d = [1u64, 0, 1];
    if s <= 2 {
        return Ok(d[s as usize]);
    }
    for _ in 3..=s {
        let next = d[1] + d[0];
        d = [d[1], d[2], next];
    }
    Ok(d[2])
}

/// Taylor coefficients of 1/(1 - x^2 - x^3) to the given order, computed
/// by power-series long division (independent of the recurrence path).
pub fn derived_zagier_series(order: usize) -> Vec<u64> {
    // multiply out (1 - x^2 - x^3) * (sum c_k x^k) = 1
    let mut c = vec![0u64; order + 1];
    c[0] = 1;
    for k in 1..=order {
        let mut acc = 0u64;
        if k >= 2 {
            acc += c[k - 2];
        }
        if k >= 3 {
            acc += c[k - 3];
        }
        c[k] = acc;
    }
    c
}

/// One row of the dimension table. Rank-derived fields are present only
/// when the relation matrix was computed (they grow quickly with weight).
#[derive(Clone, Debug, Serialize)]
pub struct DimensionTableEntry {
    pub weight: u32,
    pub admissible_count: u64,
    pub relation_rank: Option<u64>,
    pub upper_bound: Option<u64>,
    pub zagier_d: u64,
}

/// Dimension data for weights 2..=max_weight. `rank_up_to` bounds the
/// weights for which the exact double-shuffle rank is computed; beyond it
/// the rank and bound columns are absent.
pub fn dimension_table(max_weight: u32, rank_up_to: u32) -> Result<Vec<DimensionTableEntry>> {
    if max_weight < 2 {
        return Err(Error::DomainError("max_weight must be >= 2".into()));
    }
    let mut out = Vec::new();
    for w in 2..=max_weight {
        let count = 1u64 << (w - 2);
        let (rank, bound) = if w <= rank_up_to {
            let m = double_shuffle_relations(w)?;
            let r = m.exact_rank() as u64;
            (Some(r), Some(count - r))
        } else {
            (None, None)
        };
        out.push(DimensionTableEntry {
            weight: w,
            admissible_count: count,
            relation_rank: rank,
            upper_bound: bound,
            zagier_d: zagier_d(w as i64)?,
        });
    }
    Ok(out)
}
