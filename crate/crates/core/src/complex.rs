//! Complex values built from two tracked [`Real`] components.

use std::fmt;

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let bits = re.precision_bits();
        Complex { re, im: Real::zero(bits) }
    }

    pub fn zero(bits: usize) -> Self {
        Complex { re: Real::zero(bits), im: Real::zero(bits) }
    }

    pub fn one(bits: usize) -> Self {
        Complex { re: Real::one(bits), im: Real::zero(bits) }
    }

    pub fn i(bits: usize) -> Self {
        Complex { re: Real::zero(bits), im: Real::one(bits) }
    }

    pub fn precision_bits(&self) -> usize {
        self.re.precision_bits().min(self.im.precision_bits())
    }

    pub fn conj(&self) -> Complex {
        Complex { re: self.re.clone(), im: -&self.im }
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex { re: &self.re * r, im: &self.im * r }
    }

    pub fn mul_pow2(&self, k: i64) -> Complex {
        Complex { re: self.re.mul_pow2(k), im: self.im.mul_pow2(k) }
    }

    /// Multiply by i (exact rotation).
    pub fn mul_i(&self) -> Complex {
        Complex { re: -&self.im, im: self.re.clone() }
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Result<Real> {
        let n = self.norm_sqr();
        if n.is_exact() && n.value() == &crate::real::Float::ZERO {
            return Ok(Real::zero(self.precision_bits()));
        }
        n.try_sqrt()
    }

    pub fn try_div(&self, rhs: &Complex) -> Result<Complex> {
        let den = rhs.norm_sqr();
        if !den.is_certainly_positive() {
            return Err(Error::PrecisionExhausted(
                "complex division by a value not certifiably nonzero".into(),
            ));
        }
        let num = self * &rhs.conj();
        Ok(Complex {
            re: num.re.try_div(&den)?,
            im: num.im.try_div(&den)?,
        })
    }

    pub fn recip(&self) -> Result<Complex> {
        Complex::one(self.precision_bits()).try_div(self)
    }

    /// Principal square root. Uses `sqrt((|z|+re)/2)` with the sign of the
    /// imaginary part carried over; for values certifiably on the negative
    /// real axis the result is `i*sqrt(|z|)`.
    pub fn try_sqrt(&self) -> Result<Complex> {
        let bits = self.precision_bits();
        if self.im.abs_le_pow2(-(bits as i64)) && self.im.is_exact() {
            // exact real axis
            if self.re.is_certainly_positive() || (self.re.is_exact() && !self.re.is_certainly_negative()) {
                return Ok(Complex::new(self.re.try_sqrt().unwrap_or_else(|_| Real::zero(bits)), Real::zero(bits)));
            }
            if self.re.is_certainly_negative() {
                return Ok(Complex::new(Real::zero(bits), (-&self.re).try_sqrt()?));
            }
        }
        let r = self.abs()?;
        let half = |x: Real| x.mul_pow2(-1);
        let u = half(&r + &self.re).try_sqrt()?;
        // im / (2u) is better conditioned than sqrt((r-re)/2) near the axis
        if u.is_certainly_nonzero() {
            let v = self.im.try_div(&u.mul_pow2(1))?;
            Ok(Complex::new(u, v))
        } else {
            let v = half(&r - &self.re).try_sqrt()?;
            let v = if self.im.is_certainly_negative() { -v } else { v };
            Ok(Complex::new(u, v))
        }
    }

    pub fn powi(&self, n: u64) -> Complex {
        let bits = self.precision_bits();
        let mut acc = Complex::one(bits);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn is_certainly_nonzero(&self) -> bool {
        self.re.is_certainly_nonzero() || self.im.is_certainly_nonzero()
    }

    /// Certified |z| <= 2^e (componentwise, conservative).
    pub fn abs_le_pow2(&self, e: i64) -> bool {
        self.re.abs_le_pow2(e - 1) && self.im.abs_le_pow2(e - 1)
    }

    /// |stored value| <= 2^e componentwise, ignoring error bounds.
    pub fn stored_abs_le_pow2(&self, e: i64) -> bool {
        self.re.stored_abs_le_pow2(e - 1) && self.im.stored_abs_le_pow2(e - 1)
    }

    /// Both components vanish within their own propagated error bounds.
    pub fn is_zero_within_error(&self) -> bool {
        self.re.is_zero_within_error() && self.im.is_zero_within_error()
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl std::ops::Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl std::ops::Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl std::ops::Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -&self.re, im: -&self.im }
    }
}

impl std::ops::Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex { re: -self.re, im: -self.im }
    }
}

impl std::ops::Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        (&self) + (&rhs)
    }
}

impl std::ops::Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        (&self) - (&rhs)
    }
}

impl std::ops::Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        (&self) * (&rhs)
    }
}
