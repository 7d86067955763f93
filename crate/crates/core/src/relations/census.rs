//! Monomial census: build all monomials in a set of named generators up
//! to a total degree, run relation detection over the whole vector, and
//! report every independent relation found. Found relations only ever
//! lower a conjectured transcendence degree; the absence of relations is
//! evidence, never proof.

use dashu_int::IBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rational;

use super::pslq::{RelationOutcome, RelationQuery, pslq};
use super::source::NamedValue;

/// Documented cap on the monomial count (precision budget).
pub const MONOMIAL_CAP: usize = 220;

#[derive(Clone, Debug)]
pub struct CensusParams {
    pub degree_bound: usize,
    pub precision_bits: usize,
    pub max_coeff_norm: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FoundRelation {
    /// Exponent vector per monomial, parallel to `monomial_exponents`.
    pub coefficients: Vec<String>,
    #[serde(skip)]
    pub raw: Vec<IBig>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub generator_names: Vec<String>,
    pub degree_bound: usize,
    pub monomial_count: usize,
    /// Exponent vectors in graded-lex order; index 0 is the constant 1.
    pub monomial_exponents: Vec<Vec<u32>>,
    pub relations_found: Vec<FoundRelation>,
    pub independent_relation_count: usize,
    pub empirical_trdeg_estimate: usize,
    /// Norm bound certified on the final (relation-free) active set.
    pub exclusion_norm: u64,
}

/// All exponent vectors with total degree <= bound, graded lexicographic,
/// constant first.
pub fn monomial_exponents(n_gens: usize, degree_bound: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=degree_bound {
        let mut stack = vec![(Vec::new(), total as u32)];
        while let Some((prefix, rem)) = stack.pop() {
            if prefix.len() == n_gens {
                if rem == 0 {
                    out.push(prefix);
                }
                continue;
            }
            let slots_left = n_gens - prefix.len();
            for e in (0..=rem).rev() {
                if slots_left == 1 && e != rem {
                    continue;
                }
                let mut p = prefix.clone();
                p.push(e);
                stack.push((p, rem - e));
            }
        }
    }
    out
}

fn monomial_source(gens: &[NamedValue], exps: &[u32]) -> NamedValue {
    let mut acc: Option<NamedValue> = None;
    for (g, &e) in gens.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        let p = g.power(e);
        acc = Some(match acc {
            None => p,
            Some(prev) => prev.product(&p),
        });
    }
    acc.unwrap_or_else(|| NamedValue::from_rational("1", Rational::one()))
}

/// Run the census. Relations are discovered iteratively: after each find,
/// the monomial with the largest coefficient is retired from the active
/// set and the search repeats, until the remaining set is excluded.
pub fn monomial_census(generators: &[NamedValue], params: &CensusParams) -> Result<CensusReport> {
    if generators.is_empty() {
        return Err(Error::DomainError("census needs >= 1 generator".into()));
    }
    if params.degree_bound < 1 {
        return Err(Error::DomainError("degree bound must be >= 1".into()));
    }
    let exps = monomial_exponents(generators.len(), params.degree_bound);
    if exps.len() > MONOMIAL_CAP {
        return Err(Error::BudgetExceeded(format!(
            "{} monomials exceed the cap of {MONOMIAL_CAP}",
            exps.len()
        )));
    }
    let sources: Vec<NamedValue> = exps
        .iter()
        .map(|e| monomial_source(generators, e))
        .collect();

    let mut active: Vec<usize> = (0..sources.len()).collect();
    let mut relations: Vec<Vec<IBig>> = Vec::new();
    let mut exclusion_norm = 0u64;
    while active.len() >= 2 {
        let query = RelationQuery {
            values: active.iter().map(|&i| sources[i].clone()).collect(),
            precision_bits: params.precision_bits,
            max_coeff_norm: params.max_coeff_norm,
            detect_threshold_exp: None,
        };
        match pslq(&query)?.outcome {
            RelationOutcome::Found { coefficients, .. } => {
                // embed into the full monomial index space
                let mut full = vec![IBig::ZERO; sources.len()];
                for (slot, c) in active.iter().zip(&coefficients) {
                    full[*slot] = c.clone();
                }
                // retire the monomial with the largest |coefficient|
                let retire_pos = coefficients
                    .iter()
                    .enumerate()
                    .max_by(|(i, x), (j, y)| {
                        let ax = abs_ibig(x);
                        let ay = abs_ibig(y);
                        ax.cmp(&ay).then(i.cmp(j))
                    })
                    .map(|(i, _)| i)
                    .unwrap();
                relations.push(full);
                active.remove(retire_pos);
            }
            RelationOutcome::Excluded { exclusion_norm: b } => {
                exclusion_norm = b;
                break;
            }
        }
    }

    let independent_relation_count = if relations.is_empty() {
        0
    } else {
        RationalMatrix::from_rows(
            relations
                .iter()
                .map(|r| r.iter().map(|c| Rational::from_integer(c.clone())).collect())
                .collect(),
        )?
        .exact_rank()
    };

    // degree-1 relations among the generators themselves lower the
    // empirical transcendence degree estimate
    let deg1_rank = {
        let deg1: Vec<&Vec<IBig>> = relations
            .iter()
            .filter(|r| {
                r.iter().zip(&exps).all(|(c, e)| {
                    *c == IBig::ZERO || e.iter().map(|&x| x as usize).sum::<usize>() <= 1
                })
            })
            .collect();
        if deg1.is_empty() {
            0
        } else {
            RationalMatrix::from_rows(
                deg1.iter()
                    .map(|r| r.iter().map(|c| Rational::from_integer(c.clone())).collect())
                    .collect(),
            )?
            .exact_rank()
        }
    };

    Ok(CensusReport {
        generator_names: generators.iter().map(|g| g.name().to_string()).collect(),
        degree_bound: params.degree_bound,
        monomial_count: sources.len(),
        monomial_exponents: exps,
        relations_found: relations
            .into_iter()
            .map(|r| FoundRelation {
                coefficients: r.iter().map(|c| c.to_string()).collect(),
                raw: r,
            })
            .collect(),
        independent_relation_count,
        empirical_trdeg_estimate: generators.len().saturating_sub(deg1_rank),
        exclusion_norm,
    })
}

fn abs_ibig(x: &IBig) -> IBig {
    if *x < IBig::ZERO { -x.clone() } else { x.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Real;

    #[test]
    fn exponent_enumeration() {
        let e = monomial_exponents(2, 2);
        assert_eq!(e.len(), 6); // C(4,2)
        assert_eq!(e[0], vec![0, 0]);
        assert!(e.contains(&vec![2, 0]));
        assert!(e.contains(&vec![1, 1]));
        // graded: total degree nondecreasing
        let degs: Vec<u32> = e.iter().map(|v| v.iter().sum()).collect();
        assert!(degs.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn euler_relation_census() {
        // {zeta(2), pi} at degree 2 finds exactly 6 zeta(2) - pi^2
        let gens = vec![
            NamedValue::new("zeta(2)", |bits| crate::periods::compute_zeta(2, bits)),
            NamedValue::new("pi", |bits| Ok(crate::periods::compute_pi(bits))),
        ];
        let params = CensusParams {
            degree_bound: 2,
            precision_bits: crate::bits_for_digits(70),
            max_coeff_norm: 200,
        };
        let report = monomial_census(&gens, &params).unwrap();
        assert_eq!(report.independent_relation_count, 1);
        assert_eq!(report.relations_found.len(), 1);
        let rel = &report.relations_found[0].raw;
        // support: zeta(2)^1 with 6, pi^2 with -1
        let idx_z = report
            .monomial_exponents
            .iter()
            .position(|e| e == &vec![1, 0])
            .unwrap();
        let idx_p2 = report
            .monomial_exponents
            .iter()
            .position(|e| e == &vec![0, 2])
            .unwrap();
        assert_eq!(rel[idx_z], IBig::from(6));
        assert_eq!(rel[idx_p2], IBig::from(-1));
        for (i, c) in rel.iter().enumerate() {
            if i != idx_z && i != idx_p2 {
                assert_eq!(*c, IBig::ZERO);
            }
        }
        // no degree-1 relations: estimate stays at the generator count
        assert_eq!(report.empirical_trdeg_estimate, 2);
    }

    #[test]
    fn log_power_relation_is_degree_one() {
        // {log 2, log 4}: log 4 - 2 log 2 = 0 lowers the estimate
        let gens = vec![
            NamedValue::new("log(2)", |bits| {
                crate::periods::compute_log_rational(&"2".parse().unwrap(), bits)
            }),
            NamedValue::new("log(4)", |bits| {
                crate::periods::compute_log_rational(&"4".parse().unwrap(), bits)
            }),
        ];
        let params = CensusParams {
            degree_bound: 1,
            precision_bits: crate::bits_for_digits(50),
            max_coeff_norm: 100,
        };
        let report = monomial_census(&gens, &params).unwrap();
        assert_eq!(report.independent_relation_count, 1);
        assert_eq!(report.empirical_trdeg_estimate, 1);
    }

    #[test]
    fn budget_cap() {
        let gens: Vec<NamedValue> = (0..6)
            .map(|i| {
                NamedValue::new(format!("sqrt({})", i + 2), move |bits| {
                    Real::from_integer(i + 2, bits + 16).try_sqrt()
                })
            })
            .collect();
        let params = CensusParams {
            degree_bound: 5,
            precision_bits: 256,
            max_coeff_norm: 10,
        };
        assert!(matches!(
            monomial_census(&gens, &params),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
