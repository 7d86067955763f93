//! Exact rational scalars. Everything combinatorial in the crate (series
//! coefficients, relation matrices, orbit parameters) lives here; floating
//! values only appear after an explicit conversion at a stated precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use crate::error::{Error, Result};
use crate::real::{Float, Real};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (canonicalization is inherited from the backing `RBig`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    pub const fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub const fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn new(numerator: impl Into<IBig>, denominator: impl Into<IBig>) -> Result<Self> {
        let den: IBig = denominator.into();
        if den == IBig::ZERO {
            return Err(Error::DegenerateInput("zero denominator".into()));
        }
        Ok(Rational(RBig::from_parts_signed(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<IBig>) -> Self {
        Rational(RBig::from(n.into()))
    }

    pub fn numerator(&self) -> &IBig {
        self.0.numerator()
    }

    pub fn denominator(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == RBig::ZERO
    }

    pub fn is_one(&self) -> bool {
        self.0 == RBig::ONE
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denominator() == UBig::ONE
    }

    pub fn is_positive(&self) -> bool {
        self.0 > RBig::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.0 < RBig::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() { -self.clone() } else { self.clone() }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("division by zero".into()));
        }
        Rational::new(
            IBig::from(self.denominator().clone()),
            self.numerator().clone(),
        )
    }

    /// Integer power with negative exponents allowed (errors on 0^-n).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Rational::one());
        }
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        let n = exp.unsigned_abs() as usize;
        let num = base.numerator().pow(n);
        let den = IBig::from(base.denominator().clone()).pow(n);
        Rational::new(num, den)
    }

    /// Round to the nearest integer (half away from zero).
    pub fn round(&self) -> IBig {
        let two_num = self.numerator() * IBig::from(2u8);
        let den = IBig::from(self.denominator().clone());
        let shifted = if self.is_negative() {
            two_num - &den
        } else {
            two_num + &den
        };
        shifted / (den * IBig::from(2u8))
    }

    /// Convert to a floating value of the given precision. The result is
    /// exact when the denominator is a power of two, else correct to 1 ulp.
    pub fn to_float(&self, precision_bits: usize) -> Float {
        let num = Float::from(self.numerator().clone()).with_precision(precision_bits).value();
        let den = Float::from(IBig::from(self.denominator().clone()))
            .with_precision(precision_bits)
            .value();
        num / den
    }

    /// Convert to a tracked [`Real`] certified to `precision_bits`.
    pub fn to_real(&self, precision_bits: usize) -> Real {
        Real::from_rational(self, precision_bits)
    }

    pub(crate) fn as_rbig(&self) -> &RBig {
        &self.0
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `-p`, and `p/q` with optional sign on the numerator.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<IBig> {
            IBig::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den <= IBig::ZERO {
                    return Err(Error::Parse(format!("denominator must be positive in `{s}`")));
                }
                Rational::new(parse_int(n)?, den)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(IBig::from(n))
    }
}

impl From<IBig> for Rational {
    fn from(n: IBig) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self) / (&rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += rhs.0.clone();
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= rhs.0.clone();
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// n choose k as an exact integer.
pub fn binomial(n: usize, k: usize) -> IBig {
    if k > n {
        return IBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = IBig::ONE;
    for i in 0..k {
        acc = acc * IBig::from(n - i) / IBig::from(i + 1);
    }
    acc
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> IBig {
    let mut acc = IBig::ONE;
    for i in 2..=n {
        acc *= IBig::from(i);
    }
    acc
}

pub fn cmp_rationals(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
