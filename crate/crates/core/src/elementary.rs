//! Elementary function kernels on tracked reals and complexes, principal
//! branches throughout. Each kernel computes at guarded working precision
//! and returns a result whose error bound accounts for both the propagated
//! input error and the backend operation error.

use dashu_float::ops::EstimatedLog2;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{ErrorBound, Float, Real, working_bits};

/// Arguments larger than this are rejected (magnitude headroom would
/// dominate the working precision).
const MAX_ARG_EXP: i64 = 1 << 26;

/// The elementary kernel selector; `Power` carries its rational exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryFn {
    Exp,
    Log,
    Sqrt,
    Sin,
    Atan,
    Power(Rational),
}

/// A real-or-complex argument for the dispatching entry point.
#[derive(Clone, Debug)]
pub enum Value {
    Real(Real),
    Complex(Complex),
}

impl Value {
    pub fn as_complex(&self) -> Complex {
        match self {
            Value::Real(r) => Complex::from_real(r.clone()),
            Value::Complex(z) => z.clone(),
        }
    }
}

/// Enum-dispatched entry point mirroring the kernel catalogue.
pub fn elementary(f: &ElementaryFn, x: &Value, precision_bits: usize) -> Result<Value> {
    match (f, x) {
        (ElementaryFn::Exp, Value::Real(r)) => exp_real(r, precision_bits).map(Value::Real),
        (ElementaryFn::Log, Value::Real(r)) => log_real(r, precision_bits).map(Value::Real),
        (ElementaryFn::Sqrt, Value::Real(r)) => sqrt_real(r, precision_bits).map(Value::Real),
        (ElementaryFn::Sin, Value::Real(r)) => sin_real(r, precision_bits).map(Value::Real),
        (ElementaryFn::Atan, Value::Real(r)) => atan_real(r, precision_bits).map(Value::Real),
        (ElementaryFn::Power(e), Value::Real(r)) => {
            power_real(r, e, precision_bits).map(Value::Real)
        }
        (ElementaryFn::Exp, Value::Complex(z)) => {
            exp_complex(z, precision_bits).map(Value::Complex)
        }
        (ElementaryFn::Log, Value::Complex(z)) => {
            log_complex(z, precision_bits).map(Value::Complex)
        }
        (ElementaryFn::Sqrt, Value::Complex(z)) => {
            sqrt_complex(z, precision_bits).map(Value::Complex)
        }
        (ElementaryFn::Sin, Value::Complex(z)) => {
            sin_complex(z, precision_bits).map(Value::Complex)
        }
        (ElementaryFn::Atan, Value::Complex(z)) => {
            atan_complex(z, precision_bits).map(Value::Complex)
        }
        (ElementaryFn::Power(e), Value::Complex(z)) => {
            power_complex(z, e, precision_bits).map(Value::Complex)
        }
    }
}

pub(crate) fn raw_at(x: &Real, wp: usize) -> Float {
    x.value().clone().with_precision(wp).value()
}

fn check_arg_size(x: &Real, what: &str) -> Result<i64> {
    let mag = x.mag_upper().unwrap_or(0);
    if mag > MAX_ARG_EXP {
        return Err(Error::DomainError(format!("{what}: argument too large")));
    }
    Ok(mag)
}

/// Backend op error: a few ulps of the result at working precision.
fn op_err(value: &Float, wp: usize) -> Option<i64> {
    if value == &Float::ZERO {
        Some(-(wp as i64))
    } else {
        Some(value.log2_bounds().1.ceil() as i64 + 4 - wp as i64)
    }
}

fn merge(err_a: Option<i64>, err_b: Option<i64>) -> ErrorBound {
    match (err_a, err_b) {
        (None, None) => ErrorBound::Exact,
        (Some(a), None) => ErrorBound::Abs(a + 1),
        (None, Some(b)) => ErrorBound::Abs(b + 1),
        (Some(a), Some(b)) => ErrorBound::Abs(a.max(b) + 1),
    }
}

pub fn exp_real(x: &Real, precision_bits: usize) -> Result<Real> {
    let mag = check_arg_size(x, "exp")?;
    // |exp x| <= 2^(1.45 * 2^mag); keep headroom for the output magnitude
    let out_mag = ((1.5 * (2f64.powi(mag.clamp(-60, 40) as i32))).ceil() as i64).max(1);
    if out_mag > MAX_ARG_EXP {
        return Err(Error::DomainError("exp: argument too large".into()));
    }
    let wp = working_bits(precision_bits, out_mag.max(8) as usize);
    let v = raw_at(x, wp).exp();
    let oe = op_err(&v, wp);
    let prop = x.error_exp().map(|e| e + out_mag + 1);
    Ok(Real::with_error(v, merge(prop, oe), precision_bits))
}

pub fn log_real(x: &Real, precision_bits: usize) -> Result<Real> {
    if !x.is_certainly_positive() {
        return Err(Error::DomainError(
            "log: argument not certifiably positive".into(),
        ));
    }
    check_arg_size(x, "log")?;
    let wp = working_bits(precision_bits, 16);
    let v = raw_at(x, wp).ln();
    let l = x.value().log2_bounds().0.floor() as i64 - 1;
    let prop = x.error_exp().map(|e| e - l + 1);
    Ok(Real::with_error(v.clone(), merge(prop, op_err(&v, wp)), precision_bits))
}

pub fn sqrt_real(x: &Real, precision_bits: usize) -> Result<Real> {
    let wp = working_bits(precision_bits, 8);
    let lifted = Real::with_error(raw_at(x, wp), x.error_bound(), wp);
    let r = lifted.try_sqrt().map_err(|_| {
        Error::DomainError("sqrt: argument not certifiably nonnegative".into())
    })?;
    Ok(Real::with_error(r.value().clone(), r.error_bound(), precision_bits))
}

pub fn sin_real(x: &Real, precision_bits: usize) -> Result<Real> {
    let mag = check_arg_size(x, "sin")?;
    let wp = working_bits(precision_bits, mag.max(0) as usize + 8);
    let v = raw_at(x, wp).sin();
    let prop = x.error_exp(); // |cos| <= 1
    Ok(Real::with_error(v.clone(), merge(prop, Some(-(wp as i64) + mag.max(0) + 4)), precision_bits))
}

pub fn cos_real(x: &Real, precision_bits: usize) -> Result<Real> {
    let mag = check_arg_size(x, "cos")?;
    let wp = working_bits(precision_bits, mag.max(0) as usize + 8);
    let v = raw_at(x, wp).cos();
    let prop = x.error_exp();
    Ok(Real::with_error(v.clone(), merge(prop, Some(-(wp as i64) + mag.max(0) + 4)), precision_bits))
}

pub fn atan_real(x: &Real, precision_bits: usize) -> Result<Real> {
    let wp = working_bits(precision_bits, 8);
    let v = raw_at(x, wp).atan();
    let prop = x.error_exp(); // |atan'| <= 1
    Ok(Real::with_error(v.clone(), merge(prop, op_err(&v, wp)), precision_bits))
}

/// atan2(y, x), principal value in (-pi, pi].
pub fn atan2_real(y: &Real, x: &Real, precision_bits: usize) -> Result<Real> {
    if !x.is_certainly_nonzero() && !y.is_certainly_nonzero() {
        return Err(Error::DomainError(
            "atan2: argument not certifiably nonzero".into(),
        ));
    }
    let wp = working_bits(precision_bits, 8);
    let v = raw_at(y, wp).atan2(&raw_at(x, wp));
    // |grad atan2| <= 1/|z|
    let l = y
        .value()
        .log2_bounds()
        .0
        .max(x.value().log2_bounds().0)
        .floor() as i64
        - 1;
    let prop = y
        .error_exp()
        .into_iter()
        .chain(x.error_exp())
        .max()
        .map(|e| e - l + 1);
    Ok(Real::with_error(v.clone(), merge(prop, op_err(&v, wp)), precision_bits))
}

/// x^e for certifiably positive real x (real branch); exact integer
/// exponents are dispatched to repeated squaring.
pub fn power_real(x: &Real, e: &Rational, precision_bits: usize) -> Result<Real> {
    if e.is_integer() {
        let n: i64 = e.numerator().try_into().map_err(|_| {
            Error::DomainError("power: integer exponent too large".into())
        })?;
        return powi_real(x, n, precision_bits);
    }
    if !x.is_certainly_positive() {
        return Err(Error::DomainError(
            "power: fractional exponent needs a certifiably positive base".into(),
        ));
    }
    let extra = 24;
    let ln = log_real(x, precision_bits + extra)?;
    let prod = &ln * &e.to_real(precision_bits + extra);
    exp_real(&prod, precision_bits)
}

pub fn powi_real(x: &Real, n: i64, precision_bits: usize) -> Result<Real> {
    let wp = working_bits(precision_bits, 16 + 2 * (64 - n.unsigned_abs().leading_zeros() as usize));
    let mut base = Real::with_error(raw_at(x, wp), x.error_bound(), wp);
    if n == 0 {
        return Ok(Real::one(precision_bits));
    }
    if n < 0 {
        base = Real::one(wp).try_div(&base).map_err(|_| {
            Error::DomainError("power: negative exponent of uncertifiable zero".into())
        })?;
    }
    let mut acc = Real::one(wp);
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    Ok(Real::with_error(acc.value().clone(), acc.error_bound(), precision_bits))
}

// ----- complex kernels -----

pub fn exp_complex(z: &Complex, precision_bits: usize) -> Result<Complex> {
    let extra = 16;
    let p = precision_bits + extra;
    let modulus = exp_real(&z.re, p)?;
    let (s, c) = sin_cos(&z.im, p)?;
    Ok(Complex::new(&modulus * &c, &modulus * &s))
}

fn sin_cos(x: &Real, precision_bits: usize) -> Result<(Real, Real)> {
    Ok((sin_real(x, precision_bits)?, cos_real(x, precision_bits)?))
}

/// Principal log: Re = ln|z|, Im = atan2(im, re) in (-pi, pi].
pub fn log_complex(z: &Complex, precision_bits: usize) -> Result<Complex> {
    if !z.is_certainly_nonzero() {
        return Err(Error::DomainError(
            "log: argument not certifiably nonzero".into(),
        ));
    }
    let extra = 16;
    let p = precision_bits + extra;
    let r2 = z.norm_sqr();
    let re = log_real(&r2, p)?.mul_pow2(-1);
    let im = atan2_real(&z.im, &z.re, p)?;
    Ok(Complex::new(re, im))
}

pub fn sqrt_complex(z: &Complex, precision_bits: usize) -> Result<Complex> {
    let wp = working_bits(precision_bits, 8);
    let lifted = Complex::new(
        Real::with_error(raw_at(&z.re, wp), z.re.error_bound(), wp),
        Real::with_error(raw_at(&z.im, wp), z.im.error_bound(), wp),
    );
    lifted.try_sqrt()
}

/// sin z = (e^{iz} - e^{-iz}) / 2i.
pub fn sin_complex(z: &Complex, precision_bits: usize) -> Result<Complex> {
    let p = precision_bits + 16;
    let iz = z.mul_i();
    let a = exp_complex(&iz, p)?;
    let b = exp_complex(&-&iz, p)?;
    let diff = &a - &b;
    // divide by 2i: multiply by -i/2
    Ok((-diff.mul_i()).mul_pow2(-1))
}

/// atan z = (i/2) (log(1 - iz) - log(1 + iz)).
pub fn atan_complex(z: &Complex, precision_bits: usize) -> Result<Complex> {
    let p = precision_bits + 16;
    let bits = z.precision_bits().max(p);
    let one = Complex::one(bits);
    let iz = z.mul_i();
    let a = log_complex(&(&one - &iz), p)?;
    let b = log_complex(&(&one + &iz), p)?;
    Ok((&a - &b).mul_i().mul_pow2(-1))
}

/// z^e, principal branch via exp(e * log z); integer exponents exact-path.
pub fn power_complex(z: &Complex, e: &Rational, precision_bits: usize) -> Result<Complex> {
    if e.is_integer() {
        let n: i64 = e.numerator().try_into().map_err(|_| {
            Error::DomainError("power: integer exponent too large".into())
        })?;
        let wp = working_bits(precision_bits, 16);
        let lifted = Complex::new(
            Real::with_error(raw_at(&z.re, wp), z.re.error_bound(), wp),
            Real::with_error(raw_at(&z.im, wp), z.im.error_bound(), wp),
        );
        if n >= 0 {
            return Ok(lifted.powi(n as u64));
        }
        return lifted.powi(n.unsigned_abs()).recip();
    }
    let p = precision_bits + 24;
    let lg = log_complex(z, p)?;
    let scaled = lg.scale(&e.to_real(p));
    exp_complex(&scaled, precision_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn exp_zero_is_one() {
        let r = exp_real(&Real::zero(128), 128).unwrap();
        assert!((&r - &Real::one(128)).abs_le_pow2(-120));
    }

    #[test]
    fn log_of_product_of_sqrts() {
        // log(sqrt(2) * sqrt(2)) agrees with log(2) within combined error
        let bits = 160;
        let two = Real::from_integer(2, bits + 40);
        let s = sqrt_real(&two, bits + 20).unwrap();
        let prod = &s * &s;
        let lhs = log_real(&prod, bits).unwrap();
        let rhs = log_real(&two, bits).unwrap();
        let d = &lhs - &rhs;
        let budget = lhs
            .error_exp()
            .unwrap()
            .max(rhs.error_exp().unwrap())
            + 4;
        assert!(d.abs_le_pow2(budget), "residual {:?} budget 2^{}", d, budget);
    }

    #[test]
    fn sin_one_reference() {
        // sin(1) = 0.84147098480789650665250232163029899962256306079837...
        let r = sin_real(&Real::one(200), 200).unwrap();
        let want = "8414709848078965066525023216302989996225630607984";
        let (digits, e10, neg) = r.decimal_digits(49).unwrap();
        assert!(!neg);
        assert_eq!(e10, -1);
        assert_eq!(digits, want);
    }

    #[test]
    fn log_rejects_nonpositive() {
        assert!(log_real(&Real::zero(64), 64).is_err());
        assert!(log_real(&Real::from_integer(-3, 64), 64).is_err());
    }

    #[test]
    fn power_paths() {
        let x = rat("2/3").to_real(160);
        let cube = power_real(&x, &rat("3"), 128).unwrap();
        assert!((cube.to_f64() - 8.0 / 27.0).abs() < 1e-12);
        let inv = power_real(&x, &rat("-2"), 128).unwrap();
        assert!((inv.to_f64() - 9.0 / 4.0).abs() < 1e-12);
        let half = power_real(&Real::from_integer(2, 160), &rat("1/2"), 128).unwrap();
        assert!((half.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn complex_exp_log_roundtrip() {
        let z = Complex::new(rat("1/3").to_real(200), rat("-2/5").to_real(200));
        let w = exp_complex(&z, 160).unwrap();
        let back = log_complex(&w, 150).unwrap();
        assert!((&back.re - &z.re).abs_le_pow2(-130));
        assert!((&back.im - &z.im).abs_le_pow2(-130));
    }

    #[test]
    fn complex_principal_branch() {
        // log(-1) = i*pi
        let m1 = Complex::from_real(Real::from_integer(-1, 160));
        let l = log_complex(&m1, 140).unwrap();
        assert!(l.re.abs_le_pow2(-130));
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn complex_sin_matches_real() {
        let x = rat("3/7").to_real(200);
        let a = sin_real(&x, 160).unwrap();
        let b = sin_complex(&Complex::from_real(x), 160).unwrap();
        assert!((&a - &b.re).abs_le_pow2(-140));
        assert!(b.im.abs_le_pow2(-140));
    }

    #[test]
    fn enum_dispatch_covers_both_argument_kinds() {
        let bits = 150;
        let x = rat("2/5").to_real(bits + 40);
        for f in [
            ElementaryFn::Exp,
            ElementaryFn::Sqrt,
            ElementaryFn::Sin,
            ElementaryFn::Atan,
            ElementaryFn::Power(rat("3/2")),
        ] {
            let r = elementary(&f, &Value::Real(x.clone()), bits).unwrap();
            let z = elementary(&f, &Value::Complex(Complex::from_real(x.clone())), bits).unwrap();
            let (Value::Real(r), Value::Complex(z)) = (r, z) else {
                panic!("dispatch changed the argument kind");
            };
            assert!(
                (&r - &z.re).stored_abs_le_pow2(-(bits as i64) + 10),
                "{f:?} real vs complex mismatch"
            );
            assert!(z.im.stored_abs_le_pow2(-(bits as i64) + 10), "{f:?} imaginary leak");
        }
        // principal branch on the complex path where the real one rejects
        let neg = Value::Complex(Complex::from_real(rat("-3").to_real(bits + 40)));
        let log = elementary(&ElementaryFn::Log, &neg, bits).unwrap();
        let Value::Complex(l) = log else { panic!() };
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-12);
        assert!(
            elementary(&ElementaryFn::Log, &Value::Real(rat("-3").to_real(bits)), bits).is_err()
        );
    }
}
