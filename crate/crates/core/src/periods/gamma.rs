//! Γ at positive rationals via Spouge's series with its explicit error
//! constant.


use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{Float, Real, working_bits};

use super::pi::pi_float;

const MAX_ARG: f64 = 1.0e4;

/// Γ(x) for rational x > 0, certified to `2^-precision_bits`.
/// Negative arguments (reflection) are out of scope.
pub fn compute_gamma_rational(x: &Rational, precision_bits: usize) -> Result<Real> {
    if !x.is_positive() {
        return Err(Error::DomainError(format!(
            "gamma requires x > 0, got {x} (poles/reflection out of scope)"
        )));
    }
    let xf = x.numerator().to_f64().value() / x.denominator().to_f64().value();
    if xf > MAX_ARG {
        return Err(Error::DomainError(format!(
            "gamma argument {x} too large (max {MAX_ARG})"
        )));
    }
    if x.is_integer() {
        // exact factorial
        let n: i64 = x.numerator().try_into().unwrap();
        let mut acc = Rational::one();
        for k in 2..n {
            acc = acc * Rational::from(k);
        }
        return Ok(acc.to_real(precision_bits));
    }
    // magnitude headroom: lgamma(x) bits for large x, -log2(x) for tiny x
    let lg = ln_gamma_estimate(xf.max(1.0)) / std::f64::consts::LN_2;
    let tiny = if xf < 1.0 { -xf.log2() } else { 0.0 };
    let mag = (lg.max(tiny).max(0.0)).ceil() as usize + 8;
    let wp = working_bits(precision_bits, mag + 24);

    // shift into Spouge's domain: Gamma(x) = Gamma(x+1)/x for x < 1
    let shift = xf < 1.0;
    let y = if shift {
        x + &Rational::one()
    } else {
        x.clone()
    };
    let g = spouge(&y, wp);
    let v = if shift { g / x.to_float(wp) } else { g };
    Ok(Real::certified(v, precision_bits))
}

fn ln_gamma_estimate(x: f64) -> f64 {
    // Stirling, adequate for headroom estimation
    (x - 0.5) * x.ln() - x + 0.919
}

/// Spouge's formula for Γ(y) with y >= 1:
/// Γ(z+1) = (z+a)^(z+1/2) e^(-(z+a)) [c_0 + Σ_{k=1}^{a-1} c_k/(z+k) + ε],
/// |ε| <= a^(-1/2) (2π)^(-(a+1/2)).
fn spouge(y: &Rational, wp: usize) -> Float {
    let a = ((wp + 12) as f64 / (2.0 * std::f64::consts::PI).log2()).ceil() as usize + 2;
    let z = (y - &Rational::one()).to_float(wp);
    let two_pi = pi_float(wp) * Float::from(2);
    let c0 = two_pi.clone().sqrt();

    let e = Float::ONE.with_precision(wp).value().exp();
    let e_inv = Float::ONE.with_precision(wp).value() / &e;
    // e^(a-k), walked down from e^(a-1)
    let mut e_pow = e.powi(dashu_int::IBig::from(a as i64 - 1));

    let mut sum = c0;
    let mut fact = Float::ONE.with_precision(wp).value(); // (k-1)!
    for k in 1..a {
        // c_k = (-1)^(k-1) / (k-1)! * (a-k)^(k-1/2) * e^(a-k)
        let amk = Float::from((a - k) as i64).with_precision(wp).value();
        let half_log = amk.ln() * (Float::from(2 * k as i64 - 1) * crate::real::pow2(-1));
        let pow_term = half_log.exp();
        let ck = (&pow_term * &e_pow) / &fact;
        let contrib = ck / (&z + Float::from(k as i64));
        if k % 2 == 1 {
            sum += contrib;
        } else {
            sum -= contrib;
        }
        fact *= Float::from(k as i64);
        e_pow *= &e_inv;
    }

    let za = &z + Float::from(a as i64);
    let prefactor = (za.ln() * (&z + crate::real::pow2(-1))).exp() * (-za).exp();
    prefactor * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::pow2;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_one_is_one() {
        let g = compute_gamma_rational(&rat("1"), 120).unwrap();
        assert!((&g - &Real::one(120)).abs_le_pow2(-118));
    }

    #[test]
    fn gamma_half_squared_is_pi() {
        // reflection check at the symmetric point: Γ(1/2)^2 = π
        let bits = 220;
        let g = compute_gamma_rational(&rat("1/2"), bits + 30).unwrap();
        let sq = &g * &g;
        let pi = super::super::pi::compute_pi(bits + 30);
        assert!((&sq - &pi).abs_le_pow2(-(bits as i64)));
    }

    #[test]
    fn gamma_quarter_product() {
        // Γ(1/4) Γ(3/4) = π √2, and the 20 leading digits of Γ(1/4)
        let bits = 240;
        let a = compute_gamma_rational(&rat("1/4"), bits + 30).unwrap();
        let b = compute_gamma_rational(&rat("3/4"), bits + 30).unwrap();
        let prod = &a * &b;
        let pi = super::super::pi::compute_pi(bits + 60);
        let s2 = Real::from_integer(2, bits + 60).try_sqrt().unwrap();
        let want = &pi * &s2;
        assert!((&prod - &want).abs_le_pow2(-(bits as i64)));
        let (digits, e10, _) = a.decimal_digits(20).unwrap();
        assert_eq!((digits.as_str(), e10), ("36256099082219083119", 0));
    }

    #[test]
    fn functional_equation() {
        // Γ(x+1) = x Γ(x) for x in {1/4, 1/3, 5/2}
        let bits = 180;
        for s in ["1/4", "1/3", "5/2"] {
            let x = rat(s);
            let gx = compute_gamma_rational(&x, bits + 30).unwrap();
            let gx1 = compute_gamma_rational(&(&x + &Rational::one()), bits + 30).unwrap();
            let rhs = &x.to_real(bits + 30) * &gx;
            assert!(
                (&gx1 - &rhs).abs_le_pow2(-(bits as i64)),
                "functional equation fails at x = {s}"
            );
        }
    }

    #[test]
    fn half_integer_closed_form() {
        // Γ(7/2) = 15√π/8
        let bits = 200;
        let g = compute_gamma_rational(&rat("7/2"), bits + 40).unwrap();
        let pi = super::super::pi::compute_pi(bits + 60);
        let want = &pi.try_sqrt().unwrap() * &rat("15/8").to_real(bits + 60);
        assert!((&g - &want).stored_abs_le_pow2(-(bits as i64)));
    }

    #[test]
    fn integer_values_exact() {
        let g5 = compute_gamma_rational(&rat("5"), 100).unwrap();
        assert!(g5.is_exact());
        assert_eq!(g5.value().to_f64().value(), 24.0);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(compute_gamma_rational(&rat("0"), 64).is_err());
        assert!(compute_gamma_rational(&rat("-1/2"), 64).is_err());
    }

    #[test]
    fn precision_doubling() {
        let lo = compute_gamma_rational(&rat("1/3"), 100).unwrap();
        let hi = compute_gamma_rational(&rat("1/3"), 200).unwrap();
        let d = &lo - &hi;
        assert!(d.stored_abs_le_pow2(lo.error_exp().unwrap() + 1), "{d:?}");
        let _ = pow2(0);
    }
}
