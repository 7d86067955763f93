//! Arbitrary-precision real values with tracked worst-case error exponents.
//!
//! A [`Real`] is a binary floating value together with a certified absolute
//! error bound `|true - stored| <= 2^error_exp` (or an exact marker).
//! Propagation is worst-case exponent arithmetic, not interval arithmetic:
//! bounds are conservative over-estimates, cheap to carry, and sufficient
//! for relation-detection thresholds.
//!
//! Kernels follow a uniform guard-bit contract: compute internally with
//! `precision_bits + GUARD_BITS` (plus magnitude headroom) and certify
//! `error_exp <= -precision_bits` on the result.

use std::cmp::Ordering;
use std::fmt;

use dashu_float::FBig;
use dashu_float::ops::EstimatedLog2;
use dashu_float::round::mode;
use dashu_int::IBig;
use dashu_int::ops::PowerOfTwo;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Raw arbitrary-precision binary float, truncation rounding.
pub type Float = FBig<mode::Zero, 2>;

/// Guard bits added by every kernel on top of the requested precision.
pub const GUARD_BITS: usize = 32;

/// Working precision for a kernel: requested bits, guard, and any extra
/// headroom the kernel needs (magnitude, accumulated-op count, ...).
pub fn working_bits(precision_bits: usize, extra: usize) -> usize {
    precision_bits + GUARD_BITS + extra
}

/// 2^e as a raw float.
pub fn pow2(e: i64) -> Float {
    Float::from_parts(IBig::ONE, e as isize)
}

/// Certified absolute error of a stored value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorBound {
    /// The stored value is the mathematical value (dyadic rationals only).
    Exact,
    /// `|true - stored| <= 2^exp`.
    Abs(i64),
}

impl ErrorBound {
    pub fn exp(&self) -> Option<i64> {
        match self {
            ErrorBound::Exact => None,
            ErrorBound::Abs(e) => Some(*e),
        }
    }

}

/// Sum a list of error exponents conservatively: n terms each `<= 2^max`
/// sum to `<= 2^(max + ceil(log2 n))`.
fn combine_errors(exps: &[Option<i64>]) -> ErrorBound {
    let finite: Vec<i64> = exps.iter().filter_map(|e| *e).collect();
    if finite.is_empty() {
        return ErrorBound::Exact;
    }
    let max = *finite.iter().max().unwrap();
    let slack = usize::BITS - (finite.len() - 1).leading_zeros();
    ErrorBound::Abs(max.saturating_add(slack as i64))
}

/// Arbitrary-precision real with certified error.
#[derive(Clone)]
pub struct Real {
    value: Float,
    error: ErrorBound,
    precision_bits: usize,
}

impl Real {
    // ----- construction -----

    pub fn zero(precision_bits: usize) -> Self {
        let value = Float::ZERO.with_precision(working_bits(precision_bits, 0)).value();
        Real { value, error: ErrorBound::Exact, precision_bits }
    }

    pub fn one(precision_bits: usize) -> Self {
        let value = Float::ONE.with_precision(working_bits(precision_bits, 0)).value();
        Real { value, error: ErrorBound::Exact, precision_bits }
    }

    pub fn from_integer(n: impl Into<IBig>, precision_bits: usize) -> Self {
        use dashu_int::ops::BitTest;
        let n: IBig = n.into();
        // keep enough mantissa that the integer stays exact
        let wp = working_bits(precision_bits, 0).max(n.bit_len() + 1);
        Real {
            value: Float::from(n).with_precision(wp).value(),
            error: ErrorBound::Exact,
            precision_bits,
        }
    }

    /// Exact if the denominator is a power of two, else certified to the
    /// full working precision (guard bits included).
    pub fn from_rational(r: &Rational, precision_bits: usize) -> Self {
        if r.is_zero() {
            return Real::zero(precision_bits);
        }
        let mag = r.as_rbig().log2_bounds().1.ceil() as i64 + 1;
        let wp = working_bits(precision_bits, mag.max(0) as usize);
        let value = r.to_float(wp);
        let error = if r.denominator().is_power_of_two() {
            ErrorBound::Exact
        } else {
            ErrorBound::Abs(mag - wp as i64 + 1)
        };
        Real { value, error, precision_bits }
    }

    /// Wrap a kernel result computed at working precision, certifying the
    /// guard-bit contract `error_exp <= -precision_bits`.
    pub(crate) fn certified(value: Float, precision_bits: usize) -> Self {
        Real {
            value,
            error: ErrorBound::Abs(-(precision_bits as i64)),
            precision_bits,
        }
    }

    /// Construct from raw parts; the caller asserts the error bound.
    pub fn with_error(value: Float, error: ErrorBound, precision_bits: usize) -> Self {
        Real { value, error, precision_bits }
    }

    // ----- accessors -----

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn precision_bits(&self) -> usize {
        self.precision_bits
    }

    pub fn error_bound(&self) -> ErrorBound {
        self.error
    }

    /// Error exponent; `None` means exact.
    pub fn error_exp(&self) -> Option<i64> {
        self.error.exp()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.error, ErrorBound::Exact)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Upper bound e with |value| <= 2^e, from the stored approximation.
    pub fn mag_upper(&self) -> Option<i64> {
        if self.value == Float::ZERO {
            None
        } else {
            Some(self.value.log2_bounds().1.ceil() as i64 + 1)
        }
    }

    /// Lower bound e with |value| >= 2^e (of the stored approximation).
    fn mag_lower_stored(&self) -> Option<i64> {
        if self.value == Float::ZERO {
            None
        } else {
            Some(self.value.log2_bounds().0.floor() as i64 - 1)
        }
    }

    /// Upper bound on |true value|, error included.
    pub fn mag_upper_true(&self) -> Option<i64> {
        match (self.mag_upper(), self.error.exp()) {
            (None, None) => None,
            (m, e) => combine_errors(&[m, e]).exp(),
        }
    }

    // ----- certified predicates -----

    /// True only if the sign is provable given the error bound.
    pub fn is_certainly_positive(&self) -> bool {
        if self.value <= Float::ZERO {
            return false;
        }
        match self.error {
            ErrorBound::Exact => true,
            ErrorBound::Abs(e) => self.mag_lower_stored().is_some_and(|l| l > e),
        }
    }

    pub fn is_certainly_negative(&self) -> bool {
        (-self.clone()).is_certainly_positive()
    }

    pub fn is_certainly_nonzero(&self) -> bool {
        self.is_certainly_positive() || self.is_certainly_negative()
    }

    /// Certified |self| <= 2^e.
    pub fn abs_le_pow2(&self, e: i64) -> bool {
        match self.mag_upper_true() {
            None => true,
            Some(m) => m <= e,
        }
    }

    /// |stored value| <= 2^e, ignoring the error bound. For tests that
    /// compare two approximations whose certified bounds dominate the
    /// actual discrepancy (e.g. precision-doubling checks).
    pub fn stored_abs_le_pow2(&self, e: i64) -> bool {
        match self.mag_upper() {
            None => true,
            Some(m) => m <= e,
        }
    }

    /// The stored value is indistinguishable from zero given its own
    /// propagated error bound ("vanishes within combined error").
    pub fn is_zero_within_error(&self) -> bool {
        match self.error_exp() {
            None => self.value == Float::ZERO,
            Some(e) => self.stored_abs_le_pow2(e + 2),
        }
    }

    /// Compare with certified separation; `None` when the error bounds
    /// overlap and neither order can be proven.
    pub fn cmp_certified(&self, other: &Real) -> Option<Ordering> {
        let d = self - other;
        if d.is_certainly_positive() {
            Some(Ordering::Greater)
        } else if d.is_certainly_negative() {
            Some(Ordering::Less)
        } else if d.is_exact() && d.value == Float::ZERO {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    // ----- arithmetic -----

    fn result_bits(&self, other: &Real) -> usize {
        self.precision_bits.min(other.precision_bits)
    }

    fn rounding_err(value: &Float) -> Option<i64> {
        if value == &Float::ZERO {
            None
        } else {
            let prec = value.precision();
            if prec == 0 {
                None // unlimited precision: dyadic-exact operation
            } else {
                Some(value.log2_bounds().1.ceil() as i64 + 1 - prec as i64)
            }
        }
    }

    pub fn neg_assign(&mut self) {
        self.value = -std::mem::take(&mut self.value);
    }

    pub fn abs(&self) -> Real {
        if self.value < Float::ZERO { -self.clone() } else { self.clone() }
    }

    /// Exact scaling by 2^k.
    pub fn mul_pow2(&self, k: i64) -> Real {
        let error = match self.error {
            ErrorBound::Exact => ErrorBound::Exact,
            ErrorBound::Abs(e) => ErrorBound::Abs(e + k),
        };
        Real {
            value: &self.value * pow2(k),
            error,
            precision_bits: self.precision_bits,
        }
    }

    fn value_lifted(&self) -> Float {
        if self.value.precision() == 0 {
            // dyadic-exact value: give it a finite mantissa before inexact ops
            self.value
                .clone()
                .with_precision(working_bits(self.precision_bits, 0))
                .value()
        } else {
            self.value.clone()
        }
    }

    pub fn try_div(&self, rhs: &Real) -> Result<Real> {
        if !rhs.is_certainly_nonzero() {
            return Err(Error::PrecisionExhausted(
                "division by a value not certifiably nonzero".into(),
            ));
        }
        let value = self.value_lifted() / rhs.value_lifted();
        let error = match (self.error, rhs.error) {
            (ErrorBound::Exact, ErrorBound::Exact) => {
                combine_errors(&[Real::rounding_err(&value)])
            }
            _ => {
                let ly = rhs.mag_lower_stored().unwrap();
                let ex = self.error.exp();
                let ey = rhs.error.exp();
                let mx = self.mag_upper();
                let my = rhs.mag_upper();
                // |x/y - x~/y~| <= (|x-x~||y~| + |x~||y-y~|) / (|y||y~|)
                let num = combine_errors(&[
                    ex.and_then(|e| my.map(|m| e + m)).or(ex),
                    ey.and_then(|e| mx.map(|m| e + m)),
                ]);
                let prop = num.exp().map(|n| n - (2 * ly - 1));
                combine_errors(&[prop, Real::rounding_err(&value)])
            }
        };
        Ok(Real { value, error, precision_bits: self.result_bits(rhs) })
    }

    /// Principal square root; the argument must be certifiably nonnegative
    /// (exact zero allowed).
    pub fn try_sqrt(&self) -> Result<Real> {
        if self.is_exact() && self.value == Float::ZERO {
            return Ok(Real::zero(self.precision_bits));
        }
        if !self.is_certainly_positive() {
            return Err(Error::NonPositiveInput(
                "sqrt of a value not certifiably positive".into(),
            ));
        }
        let value = self.value_lifted().sqrt();
        let error = match self.error {
            ErrorBound::Exact => combine_errors(&[Real::rounding_err(&value)]),
            ErrorBound::Abs(e) => {
                let l = self.mag_lower_stored().unwrap();
                // |sqrt(x~) - sqrt(x)| <= |x~ - x| / sqrt(x_low)
                let prop = Some(e - (l - 1).div_euclid(2));
                combine_errors(&[prop, Real::rounding_err(&value)])
            }
        };
        Ok(Real { value, error, precision_bits: self.precision_bits })
    }

    /// Round the stored value down to `bits` of precision (error adjusted).
    pub fn rounded_to(&self, bits: usize) -> Real {
        let value = self.value.clone().with_precision(bits).value();
        let error = combine_errors(&[self.error.exp(), Real::rounding_err(&value)]);
        Real { value, error, precision_bits: self.precision_bits.min(bits) }
    }

    // ----- decimal output -----

    /// Round to `digits` significant decimal digits. Returns the digit
    /// string (no sign, no point), the decimal exponent e10 of the leading
    /// digit, and the sign. The stored approximation is rounded half-even;
    /// the certified error annotation is the caller's concern.
    pub fn decimal_digits(&self, digits: usize) -> Result<(String, i64, bool)> {
        if digits == 0 {
            return Err(Error::DomainError("digits must be >= 1".into()));
        }
        if self.value == Float::ZERO {
            return Ok(("0".repeat(digits), 0, false));
        }
        let neg = self.value < Float::ZERO;
        let wp = digits * 4 + 64;
        let abs = self.abs().value.clone().with_precision(wp).value();
        let mut e10 = (abs.log2_bounds().0 as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let ten = Float::from(10).with_precision(wp).value();
        loop {
            let scale_exp = digits as i64 - 1 - e10;
            let scaled = &abs * ten.powi(IBig::from(scale_exp));
            let n = round_half_even(&scaled);
            let lo = IBig::from(10).pow(digits - 1);
            let hi = IBig::from(10).pow(digits);
            if n >= hi {
                e10 += 1;
                continue;
            }
            if n < lo && !(digits == 1 && n >= IBig::ZERO)
                && n < lo {
                    e10 -= 1;
                    continue;
                }
            return Ok((n.to_string(), e10, neg));
        }
    }
}

fn round_half_even(x: &Float) -> IBig {
    let floor = x.floor();
    let frac = x - &floor;
    let floor_int = ibig_from_float_int(&floor);
    let half = pow2(-1);
    match frac.cmp(&half) {
        Ordering::Less => floor_int,
        Ordering::Greater => floor_int + IBig::ONE,
        Ordering::Equal => {
            if &floor_int % IBig::from(2) == IBig::ZERO {
                floor_int
            } else {
                floor_int + IBig::ONE
            }
        }
    }
}

/// Round a float to the nearest integer (half toward +inf).
pub(crate) fn float_round_to_ibig(x: &Float) -> IBig {
    let shifted = x + pow2(-1);
    ibig_from_float_int(&shifted.floor())
}

fn ibig_from_float_int(x: &Float) -> IBig {
    // x must be an integer-valued float
    let repr = x.repr();
    let exp = repr.exponent();
    let sig = repr.significand().clone();
    if exp >= 0 {
        sig << exp as usize
    } else {
        sig >> (-exp) as usize
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Real({:.6e}, err={:?}, bits={})",
            self.to_f64(),
            self.error.exp(),
            self.precision_bits
        )
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

macro_rules! real_addsub {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let value = &self.value $op &rhs.value;
                let error = combine_errors(&[
                    self.error.exp(),
                    rhs.error.exp(),
                    Real::rounding_err(&value),
                ]);
                Real { value, error, precision_bits: self.result_bits(rhs) }
            }
        }
        impl std::ops::$trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self) $op (&rhs)
            }
        }
        impl std::ops::$trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self) $op rhs
            }
        }
    };
}

real_addsub!(Add, add, +);
real_addsub!(Sub, sub, -);

impl std::ops::Mul<&Real> for &Real {
    type Output = Real;
    // error bounds multiply as magnitudes, i.e. exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Real) -> Real {
        let value = &self.value * &rhs.value;
        let ex = self.error.exp();
        let ey = rhs.error.exp();
        let mx = self.mag_upper();
        let my = rhs.mag_upper();
        let error = combine_errors(&[
            ex.and_then(|e| my.map(|m| e + m)),
            ey.and_then(|e| mx.map(|m| e + m)),
            ex.and_then(|a| ey.map(|b| a + b)),
            Real::rounding_err(&value),
        ]);
        Real { value, error, precision_bits: self.result_bits(rhs) }
    }
}

impl std::ops::Mul for Real {
    type Output = Real;
    fn mul(self, rhs: Real) -> Real {
        (&self) * (&rhs)
    }
}

impl std::ops::Mul<&Real> for Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        (&self) * rhs
    }
}

impl std::ops::Div<&Real> for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        self.try_div(rhs).expect("uncertifiable division")
    }
}

impl std::ops::Div for Real {
    type Output = Real;
    fn div(self, rhs: Real) -> Real {
        (&self) / (&rhs)
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(mut self) -> Real {
        self.value = -self.value;
        self
    }
}

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn exactness_tracking() {
        let half = Real::from_rational(&rat("1/2"), 64);
        assert!(half.is_exact());
        let third = Real::from_rational(&rat("1/3"), 64);
        assert!(!third.is_exact());
        assert!(third.error_exp().unwrap() <= -64);
        let sum = &half + &third;
        assert!(!sum.is_exact());
        assert!((sum.to_f64() - 5.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn certified_sign() {
        let x = Real::from_rational(&rat("1/1000000"), 128);
        assert!(x.is_certainly_positive());
        let y = Real::from_rational(&rat("-1/1000000"), 128);
        assert!(y.is_certainly_negative());
        // error bound larger than the value: sign unprovable
        let fuzzy = Real::with_error(pow2(-100), ErrorBound::Abs(-50), 128);
        assert!(!fuzzy.is_certainly_positive());
        assert!(!fuzzy.is_certainly_nonzero());
    }

    #[test]
    fn division_and_sqrt_errors_propagate() {
        let two = Real::from_integer(2, 128);
        let r = two.try_sqrt().unwrap();
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-14);
        assert!(r.error_exp().unwrap() < -100);
        let q = r.try_div(&r).unwrap();
        assert!((q.to_f64() - 1.0).abs() < 1e-14);
        assert!(Real::zero(64).try_sqrt().unwrap().is_exact());
        assert!(
            Real::from_integer(-1, 64).try_sqrt().is_err(),
            "sqrt of negative must fail"
        );
    }

    #[test]
    fn cmp_certified_separates() {
        let a = Real::from_rational(&rat("1/3"), 200);
        let b = Real::from_rational(&rat("1/3"), 200);
        let c = Real::from_rational(&rat("2/3"), 200);
        assert_eq!(a.cmp_certified(&c), Some(Ordering::Less));
        assert_eq!(c.cmp_certified(&a), Some(Ordering::Greater));
        // a and b differ by at most 2^-199: not certifiably ordered
        assert!(a.cmp_certified(&b).is_none() || a.cmp_certified(&b) == Some(Ordering::Equal));
    }

    #[test]
    fn decimal_digits_rounding() {
        // 1/3 at 5 digits
        let third = Real::from_rational(&rat("1/3"), 200);
        let (d, e10, neg) = third.decimal_digits(5).unwrap();
        assert_eq!((d.as_str(), e10, neg), ("33333", -1, false));
        // 2/3 rounds up
        let (d, _, _) = Real::from_rational(&rat("2/3"), 200).decimal_digits(5).unwrap();
        assert_eq!(d, "66667");
        // carry across a power of ten: 0.9999 -> 1.000 at 3 digits
        let (d, e10, _) = Real::from_rational(&rat("9999/10000"), 200)
            .decimal_digits(3)
            .unwrap();
        assert_eq!((d.as_str(), e10), ("100", 0));
        // negative
        let (d, e10, neg) = Real::from_rational(&rat("-22/7"), 200).decimal_digits(4).unwrap();
        assert_eq!((d.as_str(), e10, neg), ("3143", 0, true));
    }

    #[test]
    fn mul_pow2_is_exact() {
        let x = Real::from_rational(&rat("3/7"), 96);
        let y = x.mul_pow2(5);
        assert!((y.to_f64() - 32.0 * 3.0 / 7.0).abs() < 1e-10);
        assert_eq!(y.error_exp(), x.error_exp().map(|e| e + 5));
    }
}
