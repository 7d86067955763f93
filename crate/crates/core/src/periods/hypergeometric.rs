//! Generalized hypergeometric series pFq with rational parameters inside
//! the unit disk, by term recurrence with a geometric tail bound.

use dashu_float::ops::EstimatedLog2;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{Float, Real, pow2, working_bits};

/// pF_{p-1}(upper; lower; z) for |z| < 1 certified, rational parameters,
/// no lower parameter a nonpositive integer.
pub fn hypergeometric_pfq(
    upper: &[Rational],
    lower: &[Rational],
    z: &Real,
    precision_bits: usize,
) -> Result<Real> {
    if upper.len() != lower.len() + 1 {
        return Err(Error::DomainError(format!(
            "pFq requires #upper = #lower + 1, got {} and {}",
            upper.len(),
            lower.len()
        )));
    }
    for b in lower {
        if !b.is_positive() && b.is_integer() {
            return Err(Error::DomainError(format!(
                "lower parameter {b} is a nonpositive integer (pole)"
            )));
        }
    }
    let one = Real::one(precision_bits + 16);
    let abs_z = z.abs();
    if !(&one - &abs_z).is_certainly_positive() {
        return Err(Error::DomainError(
            "pFq requires |z| < 1, certified".into(),
        ));
    }

    let wp = working_bits(precision_bits, 24);
    let zf = z.value().clone().with_precision(wp).value();
    let z_abs_f64 = z.to_f64().abs();
    let param_bound = upper
        .iter()
        .chain(lower)
        .map(|r| {
            (r.numerator().to_f64().value() / r.denominator().to_f64().value()).abs()
        })
        .fold(0.0f64, f64::max);

    let target = pow2(-(wp as i64) - 4);
    let mut term = Float::ONE.with_precision(wp).value();
    let mut sum = term.clone();
    let mut n: u64 = 0;
    let max_terms = 64 * wp as u64;
    loop {
        // t_{n+1} = t_n * z * prod(a_i + n) / (prod(b_j + n) * (n + 1))
        let mut num = zf.clone();
        for a in upper {
            num *= a.to_float(wp) + Float::from(n);
        }
        let mut den = Float::from(n + 1).with_precision(wp).value();
        for b in lower {
            den *= b.to_float(wp) + Float::from(n);
        }
        term = term * num / den;
        sum += &term;
        n += 1;

        // geometric tail once the conservative ratio bound dips below 1
        if n as f64 > 2.0 * param_bound + 4.0 {
            let nf = n as f64;
            let mut rho = z_abs_f64;
            for _ in 0..upper.len() {
                rho *= (nf + param_bound) / (nf - param_bound);
            }
            rho += 1e-9;
            if rho < 1.0 {
                let term_mag = if term == Float::ZERO {
                    return Ok(Real::certified(sum, precision_bits));
                } else {
                    term.log2_bounds().1
                };
                let tail_exp =
                    term_mag as f64 + (rho / (1.0 - rho)).log2().max(-1.0e9);
                if tail_exp < -(wp as f64) - 4.0 {
                    break;
                }
            }
        }
        let t_abs = if term < Float::ZERO { -term.clone() } else { term.clone() };
        if t_abs < target && n as f64 > 2.0 * param_bound + 4.0 && z_abs_f64 < 0.75 {
            break;
        }
        if n >= max_terms {
            return Err(Error::PrecisionExhausted(
                "hypergeometric series did not reach the tail bound".into(),
            ));
        }
    }
    Ok(Real::certified(sum, precision_bits))
}
