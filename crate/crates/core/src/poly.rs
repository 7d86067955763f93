//! Complex roots of rational polynomials.
//!
//! Pipeline: exact Yun squarefree decomposition over Q, Durand-Kerner
//! (Weierstrass) iteration on each squarefree factor from perturbed
//! unit-circle starts, then an a posteriori certification step using
//! Weierstrass-correction inclusion disks. Working precision escalates
//! until every disk is disjoint and smaller than the requested bound.

use dashu_float::ops::EstimatedLog2;
use dashu_int::{IBig, UBig};
use dashu_int::ops::Gcd;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::{ErrorBound, Float, Real, pow2, working_bits};

// ----- exact polynomial helpers (ascending coefficients) -----

pub(crate) fn poly_normalize(coeffs: &mut Vec<Rational>) {
    while coeffs.len() > 1 && coeffs.last().is_some_and(Rational::is_zero) {
        coeffs.pop();
    }
}

pub(crate) fn poly_degree(coeffs: &[Rational]) -> usize {
    coeffs.len().saturating_sub(1)
}

pub(crate) fn poly_derivative(coeffs: &[Rational]) -> Vec<Rational> {
    if coeffs.len() <= 1 {
        return vec![Rational::zero()];
    }
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Rational::from(i as i64) * c.clone())
        .collect()
}

#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn poly_eval_rational(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

fn poly_is_constant(coeffs: &[Rational]) -> bool {
    poly_degree(coeffs) == 0
}

fn poly_monic(coeffs: &[Rational]) -> Vec<Rational> {
    let lc = coeffs.last().unwrap().clone();
    coeffs.iter().map(|c| c / &lc).collect()
}

fn poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Rational::is_zero)
}

/// Exact division; debug-asserts divisibility (internal use after gcd).
fn poly_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem = num.to_vec();
    poly_normalize(&mut rem);
    let dd = poly_degree(den);
    let lc = den.last().unwrap();
    if poly_is_zero(&rem) || poly_degree(&rem) < dd {
        debug_assert!(poly_is_zero(&rem), "non-exact polynomial division");
        return vec![Rational::zero()];
    }
    let mut quo = vec![Rational::zero(); poly_degree(&rem) - dd + 1];
    while !poly_is_zero(&rem) && poly_degree(&rem) >= dd {
        let rd = poly_degree(&rem);
        let q = &rem[rd] / lc;
        quo[rd - dd] = q.clone();
        for (i, dc) in den.iter().enumerate() {
            let t = &q * dc;
            rem[rd - dd + i] -= &t;
        }
        rem.truncate(rd); // leading term is now zero
        if rem.is_empty() {
            rem.push(Rational::zero());
        }
        poly_normalize(&mut rem);
    }
    debug_assert!(poly_is_zero(&rem), "non-exact polynomial division");
    poly_normalize(&mut quo);
    quo
}

fn poly_rem(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let mut rem = num.to_vec();
    poly_normalize(&mut rem);
    let dd = poly_degree(den);
    let lc = den.last().unwrap();
    while !poly_is_zero(&rem) && poly_degree(&rem) >= dd {
        let rd = poly_degree(&rem);
        let q = &rem[rd] / lc;
        for (i, dc) in den.iter().enumerate() {
            let t = &q * dc;
            rem[rd - dd + i] -= &t;
        }
        rem.truncate(rd);
        if rem.is_empty() {
            rem.push(Rational::zero());
        }
        poly_normalize(&mut rem);
    }
    rem
}

/// Monic gcd over Q by the Euclidean algorithm.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_normalize(&mut a);
    poly_normalize(&mut b);
    let zero = |p: &[Rational]| p.len() == 1 && p[0].is_zero();
    while !zero(&b) {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
        poly_normalize(&mut b);
    }
    if zero(&a) { a } else { poly_monic(&a) }
}

/// Yun's squarefree decomposition: returns `(factor, multiplicity)` pairs
/// with squarefree, pairwise coprime monic factors of degree >= 1.
pub(crate) fn squarefree_decomposition(coeffs: &[Rational]) -> Vec<(Vec<Rational>, usize)> {
    let f = poly_monic(coeffs);
    if poly_degree(&f) == 0 {
        return vec![];
    }
    let df = poly_derivative(&f);
    let c = poly_gcd(&f, &df);
    if poly_is_constant(&c) {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut w = poly_div_exact(&f, &c);
    let y = poly_div_exact(&df, &c);
    let mut z = poly_sub(&y, &poly_derivative(&w));
    let mut i = 1usize;
    while !poly_is_constant(&w) {
        let g = poly_gcd(&w, &z);
        if poly_degree(&g) >= 1 {
            out.push((g.clone(), i));
        }
        w = poly_div_exact(&w, &g);
        let y2 = poly_div_exact(&z, &g);
        z = poly_sub(&y2, &poly_derivative(&w));
        i += 1;
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_normalize(&mut out);
    out
}

// ----- raw complex arithmetic for the iteration hot loop -----

#[derive(Clone)]
struct C {
    re: Float,
    im: Float,
}

impl C {
    fn sub(&self, o: &C) -> C {
        C { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &C) -> C {
        C {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn div(&self, o: &C) -> C {
        let d = &o.re * &o.re + &o.im * &o.im;
        C {
            re: (&self.re * &o.re + &self.im * &o.im) / &d,
            im: (&self.im * &o.re - &self.re * &o.im) / &d,
        }
    }
    fn abs_sq(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }
    /// upper bound on log2|self|
    fn log2_ub(&self) -> f32 {
        let a = self.abs_sq();
        if a == Float::ZERO { -1.0e9 } else { a.log2_bounds().1 / 2.0 }
    }
}

fn horner(coeffs: &[C], z: &C) -> C {
    let mut acc = coeffs.last().unwrap().clone();
    for c in coeffs.iter().rev().skip(1) {
        acc = acc.mul(z);
        acc.re += &c.re;
        acc.im += &c.im;
    }
    acc
}

/// Durand-Kerner on a squarefree polynomial with integer coefficients.
/// Returns roots with certified radius <= 2^target_exp, or None if this
/// working precision could not certify.
fn durand_kerner(int_coeffs: &[IBig], wp: usize, target_exp: i64) -> Option<Vec<(C, i64)>> {
    let n = int_coeffs.len() - 1;
    let coeffs: Vec<C> = int_coeffs
        .iter()
        .map(|c| C {
            re: Float::from(c.clone()).with_precision(wp).value(),
            im: Float::ZERO.with_precision(wp).value(),
        })
        .collect();
    if n == 1 {
        // linear: exact quotient, certified by construction
        let root = C {
            re: -(&coeffs[0].re / &coeffs[1].re),
            im: Float::ZERO.with_precision(wp).value(),
        };
        return Some(vec![(root, -(wp as i64) + 8)]);
    }
    // Cauchy bound: all roots inside |z| <= 1 + max |c_i| / |c_n|
    let lc_mag = int_coeffs.last().unwrap().log2_bounds().0;
    let max_mag = int_coeffs[..n]
        .iter()
        .map(|c| if *c == IBig::ZERO { f32::MIN } else { c.log2_bounds().1 })
        .fold(f32::MIN, f32::max);
    let bound_exp = ((max_mag - lc_mag).max(0.0)).ceil() as i64 + 1;
    let radius = pow2(bound_exp);

    // perturbed starts on a circle, never symmetric about the real axis
    let seed = C {
        re: Float::from(2).with_precision(wp).value() / Float::from(5),
        im: Float::from(9).with_precision(wp).value() / Float::from(10),
    };
    let mut z: Vec<C> = Vec::with_capacity(n);
    let mut cur = C {
        re: &radius * &seed.re,
        im: &radius * &seed.im,
    };
    for _ in 0..n {
        z.push(cur.clone());
        cur = cur.mul(&seed);
        cur.re += pow2(bound_exp - 3);
    }

    let lc = coeffs.last().unwrap().clone();
    let max_iter = 60 + 10 * n + 2 * wp.ilog2() as usize;
    let mut w: Vec<C> = vec![
        C { re: Float::ZERO.with_precision(wp).value(), im: Float::ZERO.with_precision(wp).value() };
        n
    ];
    let stop = -(wp as i64) + bound_exp + 12;
    for _ in 0..max_iter {
        let mut max_w = f32::MIN;
        for i in 0..n {
            let mut den = lc.clone();
            for j in 0..n {
                if j != i {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            if den.abs_sq() == Float::ZERO {
                // coincident iterates: nudge and continue
                z[i].re += pow2(bound_exp - wp as i64 / 2);
                return durand_kerner_retry(int_coeffs, wp, target_exp, &z);
            }
            let p = horner(&coeffs, &z[i]);
            w[i] = p.div(&den);
            max_w = max_w.max(w[i].log2_ub());
            z[i] = z[i].sub(&w[i]);
        }
        if (max_w as i64) < stop {
            break;
        }
    }
    certify(&coeffs, &lc, &z, n, target_exp)
}

fn durand_kerner_retry(
    int_coeffs: &[IBig],
    wp: usize,
    target_exp: i64,
    z: &[C],
) -> Option<Vec<(C, i64)>> {
    let coeffs: Vec<C> = int_coeffs
        .iter()
        .map(|c| C {
            re: Float::from(c.clone()).with_precision(wp).value(),
            im: Float::ZERO.with_precision(wp).value(),
        })
        .collect();
    let n = int_coeffs.len() - 1;
    let lc = coeffs.last().unwrap().clone();
    let mut z = z.to_vec();
    let max_iter = 60 + 10 * n + 2 * wp.ilog2() as usize;
    for _ in 0..max_iter {
        for i in 0..n {
            let mut den = lc.clone();
            for j in 0..n {
                if j != i {
                    den = den.mul(&z[i].sub(&z[j]));
                }
            }
            if den.abs_sq() == Float::ZERO {
                return None;
            }
            let p = horner(&coeffs, &z[i]);
            z[i] = z[i].sub(&p.div(&den));
        }
    }
    certify(&coeffs, &lc, &z, n, target_exp)
}

/// Weierstrass-correction inclusion disks: every disk D(z_i, n|W_i|)
/// contains a root, and pairwise disjoint disks isolate one root each.
fn certify(coeffs: &[C], lc: &C, z: &[C], n: usize, target_exp: i64) -> Option<Vec<(C, i64)>> {
    let mut radii_exp = Vec::with_capacity(n);
    for i in 0..n {
        let mut den = lc.clone();
        for j in 0..n {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]));
            }
        }
        if den.abs_sq() == Float::ZERO {
            return None;
        }
        let wcorr = horner(coeffs, &z[i]).div(&den);
        let r_exp = (wcorr.log2_ub().ceil() as i64) + (usize::BITS - n.leading_zeros()) as i64 + 2;
        if r_exp > target_exp {
            return None;
        }
        radii_exp.push(r_exp);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = z[i].sub(&z[j]).abs_sq();
            let gap_exp = if gap == Float::ZERO {
                i64::MIN / 2
            } else {
                (gap.log2_bounds().0 / 2.0).floor() as i64
            };
            if gap_exp <= radii_exp[i].max(radii_exp[j]) + 2 {
                return None;
            }
        }
    }
    Some(z.iter().cloned().zip(radii_exp).collect())
}

/// All complex roots of a rational polynomial, with multiplicity, each
/// certified to `2^-precision_bits` and sorted lexicographically by
/// (re, im) on the rounded values.
pub fn poly_roots(coeffs: &[Rational], precision_bits: usize) -> Result<Vec<Complex>> {
    let mut c = coeffs.to_vec();
    poly_normalize(&mut c);
    if c.iter().all(Rational::is_zero) {
        return Err(Error::DegenerateInput("all coefficients are zero".into()));
    }
    if poly_degree(&c) == 0 {
        return Err(Error::DegenerateInput("degree must be >= 1".into()));
    }
    // split off roots at the origin
    let zeros = c.iter().take_while(|x| x.is_zero()).count();
    let c = &c[zeros..];

    let mut found: Vec<(Complex, usize)> = Vec::new();
    if zeros > 0 {
        found.push((Complex::zero(precision_bits), zeros));
    }
    if poly_degree(c) >= 1 {
        for (factor, mult) in squarefree_decomposition(c) {
            let ints = clear_poly_denominators(&factor);
            let deg = ints.len() - 1;
            let height = ints
                .iter()
                .map(|x| if *x == IBig::ZERO { 0.0 } else { x.log2_bounds().1 })
                .fold(0.0f32, f32::max)
                .ceil() as usize;
            let target = -(precision_bits as i64) - 2;
            let mut wp = working_bits(precision_bits, 32 + 8 * deg + height);
            let mut result = None;
            for _ in 0..6 {
                if let Some(r) = durand_kerner(&ints, wp, target) {
                    result = Some(r);
                    break;
                }
                wp *= 2;
            }
            let Some(roots) = result else {
                return Err(Error::PrecisionExhausted(
                    "root certification failed at escalated precision".into(),
                ));
            };
            for (root, r_exp) in roots {
                let z = Complex::new(
                    Real::with_error(root.re, ErrorBound::Abs(r_exp), precision_bits),
                    Real::with_error(root.im, ErrorBound::Abs(r_exp), precision_bits),
                );
                found.push((z, mult));
            }
        }
    }
    // expand multiplicities and sort deterministically
    let mut all: Vec<Complex> = found
        .into_iter()
        .flat_map(|(z, m)| std::iter::repeat_n(z, m))
        .collect();
    all.sort_by(|a, b| {
        let ka = root_sort_key(a, precision_bits);
        let kb = root_sort_key(b, precision_bits);
        ka.partial_cmp(&kb).unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(all)
}

fn root_sort_key(z: &Complex, bits: usize) -> (Float, Float) {
    (
        z.re.value().clone().with_precision(bits).value(),
        z.im.value().clone().with_precision(bits).value(),
    )
}

fn clear_poly_denominators(coeffs: &[Rational]) -> Vec<IBig> {
    let mut lcm = UBig::ONE;
    for x in coeffs {
        let d = x.denominator().clone();
        let g = lcm.clone().gcd(d.clone());
        lcm = lcm / g * d;
    }
    let lcm = IBig::from(lcm);
    coeffs
        .iter()
        .map(|x| x.numerator() * (&lcm / IBig::from(x.denominator().clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn quadratic_x2_plus_1() {
        // x^2 + 1 -> [-i, i]
        let roots = poly_roots(&rats(&[1, 0, 1]), 100).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].re.abs_le_pow2(-96));
        assert!((roots[0].im.to_f64() + 1.0).abs() < 1e-25);
        assert!((roots[1].im.to_f64() - 1.0).abs() < 1e-25);
    }

    #[test]
    fn cubic_with_factorization() {
        // 4x^3 - 4x = 4x(x-1)(x+1) -> [-1, 0, 1]
        let roots = poly_roots(&rats(&[0, -4, 0, 4]), 120).unwrap();
        let expected = [-1.0, 0.0, 1.0];
        assert_eq!(roots.len(), 3);
        for (r, want) in roots.iter().zip(expected) {
            assert!((r.re.to_f64() - want).abs() < 1e-30, "{r:?} vs {want}");
            assert!(r.im.abs_le_pow2(-110));
        }
    }

    #[test]
    fn multiple_roots_via_yun() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let roots = poly_roots(&rats(&[2, -3, 0, 1]), 80).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0].re.to_f64() + 2.0).abs() < 1e-20);
        assert!((roots[1].re.to_f64() - 1.0).abs() < 1e-20);
        assert!((roots[2].re.to_f64() - 1.0).abs() < 1e-20);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            poly_roots(&rats(&[0, 0]), 64),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            poly_roots(&rats(&[5]), 64),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn pure_power_of_x() {
        let roots = poly_roots(&rats(&[0, 0, 0, 7]), 64).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.re.is_exact() && r.im.is_exact()));
    }

    #[test]
    fn yun_decomposition_shape() {
        // (x-1)^2 (x+2): factors (x+2)^1, (x-1)^2
        let p = rats(&[2, -3, 0, 1]);
        let fs = squarefree_decomposition(&p);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].1, 1);
        assert_eq!(poly_degree(&fs[0].0), 1);
        assert_eq!(fs[1].1, 2);
        assert_eq!(poly_degree(&fs[1].0), 1);
    }

    #[test]
    fn gcd_and_division() {
        // gcd(x^2-1, x^2-2x+1) = x-1
        let a = rats(&[-1, 0, 1]);
        let b = rats(&[1, -2, 1]);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, rats(&[-1, 1]));
        let q = poly_div_exact(&a, &g);
        assert_eq!(q, rats(&[1, 1]));
    }

    #[test]
    fn wallis_cubic_real_root() {
        // x^3 - 2x - 5. Oracle: exact rational bisection on [2, 3]; the sign
        // of p at a rational point is computed exactly, so the interval is a
        // rigorous enclosure independent of the iteration above.
        let p = rats(&[-5, -2, 0, 1]);
        let mut lo: Rational = "2".parse().unwrap();
        let mut hi: Rational = "3".parse().unwrap();
        let half: Rational = "1/2".parse().unwrap();
        for _ in 0..120 {
            let mid = (&lo + &hi) * half.clone();
            if poly_eval_rational(&p, &mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let roots = poly_roots(&p, 110).unwrap();
        let real: Vec<_> = roots.iter().filter(|r| r.im.abs_le_pow2(-90)).collect();
        assert_eq!(real.len(), 1);
        let x = &real[0].re;
        // enclosure is 2^-120 wide; the root is certified to 2^-110
        let dlo = x - &lo.to_real(160);
        let dhi = &hi.to_real(160) - x;
        assert!(dlo.abs_le_pow2(-105), "root below bisection enclosure");
        assert!(dhi.abs_le_pow2(-105), "root above bisection enclosure");
        // first digits match the classical value
        let (digits, e10, _) = x.decimal_digits(11).unwrap();
        assert_eq!((digits.as_str(), e10), ("20945514815", 0));
    }
}
