//! Minimal-polynomial recognition: PSLQ over the power basis 1, x, ...,
//! x^d, degree by degree, so the first verified hit has minimal degree
//! within the norm bound.

use dashu_int::IBig;

use crate::error::Result;
use crate::rational::Rational;

use super::pslq::{RelationOutcome, RelationQuery, pslq};
use super::source::NamedValue;

#[derive(Clone, Debug)]
pub enum AlgebraicityResult {
    /// Primitive integer polynomial (ascending coefficients, positive
    /// leading coefficient) with a re-verified small residual at x.
    Found {
        polynomial: Vec<IBig>,
        degree: usize,
        residual_exp: i64,
    },
    /// No polynomial of degree <= max_degree and coefficient max-norm <=
    /// the stated bound at this precision.
    Excluded { max_degree: usize, coeff_norm: u64 },
}

/// Search for the minimal polynomial of x up to the given degree and
/// coefficient norm.
pub fn algebraicity_check(
    x: &NamedValue,
    max_degree: usize,
    max_coeff_norm: u64,
    precision_bits: usize,
) -> Result<AlgebraicityResult> {
    let mut powers: Vec<NamedValue> = vec![NamedValue::from_rational("1", Rational::one())];
    for k in 1..=max_degree {
        powers.push(x.power(k as u32));
    }
    for degree in 1..=max_degree {
        let query = RelationQuery {
            values: powers[..=degree].to_vec(),
            precision_bits,
            max_coeff_norm,
            detect_threshold_exp: None,
        };
        let result = pslq(&query)?;
        if let RelationOutcome::Found { coefficients, residual_exp } = result.outcome {
            let mut poly = coefficients;
            while poly.len() > 1 && *poly.last().unwrap() == IBig::ZERO {
                poly.pop();
            }
            let mut poly = super::pslq::normalize_primitive(poly);
            if *poly.last().unwrap() < IBig::ZERO {
                for c in poly.iter_mut() {
                    *c = -c.clone();
                }
            }
            let degree = poly.len() - 1;
            return Ok(AlgebraicityResult::Found { polynomial: poly, degree, residual_exp });
        }
    }
    Ok(AlgebraicityResult::Excluded { max_degree, coeff_norm: max_coeff_norm })
}
