//! Arithmetic-geometric mean, the quadratically convergent kernel behind
//! π and the elliptic periods.

use dashu_float::ops::EstimatedLog2;

use crate::error::{Error, Result};
use crate::real::{Float, Real, pow2, working_bits};

/// AGM of two positive raw floats at working precision `wp`.
/// The result is within `2^(mag - wp + 8)` of the true common limit.
pub(crate) fn agm_float(a0: &Float, b0: &Float, wp: usize) -> Float {
    let mut a = a0.clone().with_precision(wp).value();
    let mut b = b0.clone().with_precision(wp).value();
    debug_assert!(a > Float::ZERO && b > Float::ZERO);
    let mag = a.log2_bounds().1.max(b.log2_bounds().1).ceil() as i64 + 1;
    let stop = pow2(mag - wp as i64 + 4);
    // far-apart inputs need ~log2(log ratio) extra halving steps first
    let max_iter = 64 + 2 * wp.ilog2() as usize;
    for _ in 0..max_iter {
        let diff = (&a - &b).abs();
        if diff <= stop {
            break;
        }
        let am = (&a + &b).mul_pow2(-1);
        let gm = (&a * &b).sqrt();
        a = am;
        b = gm;
    }
    (&a + &b).mul_pow2(-1)
}

trait Pow2Shift {
    fn mul_pow2(self, k: i64) -> Float;
}

impl Pow2Shift for Float {
    fn mul_pow2(self, k: i64) -> Float {
        self * pow2(k)
    }
}

trait AbsVal {
    fn abs(self) -> Float;
}

impl AbsVal for Float {
    fn abs(self) -> Float {
        if self < Float::ZERO { -self } else { self }
    }
}

/// Arithmetic-geometric mean of two certifiably positive reals, correct to
/// `2^-precision_bits`.
pub fn agm(a: &Real, b: &Real, precision_bits: usize) -> Result<Real> {
    if !a.is_certainly_positive() || !b.is_certainly_positive() {
        let msg = if a.value() <= &Float::ZERO || b.value() <= &Float::ZERO {
            "agm requires strictly positive inputs"
        } else {
            "agm inputs carry too much error to certify positivity"
        };
        if a.value() > &Float::ZERO
            && b.value() > &Float::ZERO
            && (!a.is_exact() || !b.is_exact())
        {
            return Err(Error::PrecisionExhausted(msg.into()));
        }
        return Err(Error::NonPositiveInput(msg.into()));
    }
    // input error propagates through agm with factor <= M / min(a, b)
    let p = precision_bits as i64;
    let in_err = [a, b]
        .iter()
        .filter_map(|x| x.error_exp())
        .max();
    if let Some(e) = in_err {
        let l_min = a
            .value()
            .log2_bounds()
            .0
            .min(b.value().log2_bounds().0)
            .floor() as i64
            - 1;
        let mag = a.mag_upper().unwrap_or(0).max(b.mag_upper().unwrap_or(0));
        if e + (mag - l_min).max(0) + 2 > -p {
            return Err(Error::PrecisionExhausted(format!(
                "agm inputs certified only to 2^{e}, cannot deliver 2^-{precision_bits}"
            )));
        }
    }
    let mag_extra = a
        .mag_upper()
        .unwrap_or(0)
        .max(b.mag_upper().unwrap_or(0))
        .max(0) as usize;
    let wp = working_bits(precision_bits, mag_extra);
    let m = agm_float(a.value(), b.value(), wp);
    Ok(Real::certified(m, precision_bits))
}

/// AGM carrying the sum `S = sum 2^(n-1) c_n^2` used by the complete
/// elliptic integral of the second kind: with `a0 = 1`, `b0 = k'` and
/// `c0 = k`, one has `E/K = 1 - S`. Returns `(agm, S)` as raw floats.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn agm_with_c_sum(a0: &Float, b0: &Float, c0: &Float, wp: usize) -> (Float, Float) {
    let mut a = a0.clone().with_precision(wp).value();
    let mut b = b0.clone().with_precision(wp).value();
    let mut c = c0.clone().with_precision(wp).value();
    let mag = a.log2_bounds().1.max(b.log2_bounds().1).ceil() as i64 + 1;
    let stop = pow2(mag - wp as i64 + 4);
    let mut sum = (&c * &c).mul_pow2(-1); // 2^(-1) c_0^2
    let mut scale: i64 = 0;
    let max_iter = 64 + 2 * wp.ilog2() as usize;
    for _ in 0..max_iter {
        let diff = (&a - &b).clone().abs();
        if diff <= stop && (&c * &c) <= stop {
            break;
        }
        c = (&a - &b).mul_pow2(-1);
        let am = (&a + &b).mul_pow2(-1);
        let gm = (&a * &b).sqrt();
        a = am;
        b = gm;
        scale += 1;
        sum += (&c * &c).mul_pow2(scale - 1);
    }
    ((&a + &b).mul_pow2(-1), sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn fixed_points() {
        let one = Real::one(128);
        let m = agm(&one, &one, 128).unwrap();
        assert!((&m - &one).abs_le_pow2(-120));

        let a = Rational::new(7, 3).unwrap().to_real(128);
        let m = agm(&a, &a, 128).unwrap();
        assert!((&m - &a).abs_le_pow2(-120));
    }

    #[test]
    fn rejects_bad_inputs() {
        let one = Real::one(64);
        let zero = Real::zero(64);
        assert!(matches!(
            agm(&one, &zero, 64),
            Err(Error::NonPositiveInput(_))
        ));
        let neg = Real::from_integer(-2, 64);
        assert!(agm(&neg, &one, 64).is_err());
        // positive value but error swamps the request
        let fuzzy = Real::with_error(Float::ONE, crate::real::ErrorBound::Abs(-10), 64);
        assert!(matches!(
            agm(&fuzzy, &one, 64),
            Err(Error::PrecisionExhausted(_))
        ));
    }

    #[test]
    fn precision_doubling() {
        let a = Rational::new(22, 7).unwrap().to_real(400);
        let b = Rational::new(3, 5).unwrap().to_real(400);
        let lo = agm(&a, &b, 120).unwrap();
        let hi = agm(&a, &b, 240).unwrap();
        assert!((&lo - &hi).stored_abs_le_pow2(lo.error_exp().unwrap() + 1));
    }

    #[test]
    fn agm_invariance_step() {
        // agm(a, b) = agm((a+b)/2, sqrt(ab))
        let a = Rational::new(5, 2).unwrap().to_real(200);
        let b = Rational::new(1, 3).unwrap().to_real(200);
        let m1 = agm(&a, &b, 150).unwrap();
        let am = (&a + &b).mul_pow2(-1);
        let gm = (&a * &b).try_sqrt().unwrap();
        let m2 = agm(&am, &gm, 150).unwrap();
        assert!((&m1 - &m2).abs_le_pow2(-145));
    }
}
