//! Independent quadrature oracles for the AGM-based period values.
//!
//! A tanh-sinh (double-exponential) rule evaluates the lemniscatic
//! integral I = ∫₀¹ dx/√(1-x⁴) directly. Two catalogue values reduce to
//! it by exact calculus:
//!   π/agm(1,√2) = 2I            (Gauss),
//!   ω₁(g₂=4, g₃=0) = 2∫₁^∞ dx/√(4x³-4x) = 2I   (substitute x = 1/s²).

use periodlab_core::agm::agm;
use periodlab_core::periods::{EllipticCurveQ, compute_pi, elliptic_periods};
use periodlab_core::real::{Float, Real, pow2};

/// tanh-sinh quadrature of f on (0, 1); handles endpoint singularities.
/// The integrand receives (x, 1-x) with the complement computed stably,
/// so algebraic singularities at 1 keep full precision.
fn tanh_sinh_01(f: impl Fn(&Float, &Float) -> Float, wp: usize, levels: u32) -> Float {
    let one = Float::ONE.with_precision(wp).value();
    let half = pow2(-1);
    let pi_half = periodlab_core::periods::pi_float(wp) * &half;
    // the (1-x)^(-1/2)-type endpoint contribution decays like
    // exp(-(pi/4) sinh t); pick the range so the tail sits below 2^-wp
    let sinh_target = wp as f64 * std::f64::consts::LN_2 / std::f64::consts::FRAC_PI_4;
    let t_max = sinh_target.asinh() + 1.0;

    let node = |t: &Float| -> (Float, Float, Float) {
        // x = (1 + tanh u)/2 with u = (π/2) sinh t;
        // 1 - x = e^{-2u}/(1 + e^{-2u}) evaluated without cancellation;
        // weight = (π/4) cosh t / cosh² u
        let et = t.exp();
        let emt = &one / &et;
        let sinh_t = (&et - &emt) * &half;
        let cosh_t = (&et + &emt) * &half;
        let u = &pi_half * &sinh_t;
        let e2mu = (-(&u + &u)).exp();
        let denom = &one + &e2mu;
        let one_minus_x = &e2mu / &denom;
        let x = &one / &denom;
        let eu = u.exp();
        let emu = &one / &eu;
        let cosh_u = (&eu + &emu) * &half;
        let w = (&pi_half * &half) * &cosh_t / (&cosh_u * &cosh_u);
        (x, one_minus_x, w)
    };

    let mut h = 1.0f64;
    let mut acc = Float::ZERO.with_precision(wp).value();
    let mut prev = Float::ZERO.with_precision(wp).value();
    for level in 0..levels {
        let step = if level == 0 { 1 } else { 2 };
        let start = if level == 0 { 0 } else { 1 };
        let n_max = (t_max / h).ceil() as i64;
        let mut k = start;
        while k <= n_max {
            for sign in [1i64, -1] {
                if k == 0 && sign == -1 {
                    continue;
                }
                let t_val = (k * sign) as f64 * h;
                let t = float_from_f64(t_val, wp);
                let (x, one_minus_x, w) = node(&t);
                if x > Float::ZERO && one_minus_x > Float::ZERO {
                    acc += f(&x, &one_minus_x) * w;
                }
            }
            k += step;
        }
        let current = &acc * float_from_f64(h, wp);
        if level > 2 {
            let d = &current - &prev;
            let d = if d < Float::ZERO { -d } else { d };
            let tol = pow2(-(wp as i64) + 24);
            if d < tol {
                return current;
            }
        }
        prev = current;
        h /= 2.0;
    }
    prev
}

fn float_from_f64(x: f64, wp: usize) -> Float {
    // exact: f64 is a dyadic rational
    let (m, e) = (x * 2f64.powi(60), -60);
    Float::from_parts(dashu_int::IBig::from(m as i64), e).with_precision(wp).value()
}

fn lemniscatic_integral(wp: usize) -> Float {
    tanh_sinh_01(
        |x: &Float, one_minus_x: &Float| {
            // 1 - x⁴ = (1-x)(1+x)(1+x²), using the stable complement
            let one = Float::ONE.with_precision(wp).value();
            let x2 = x * x;
            let prod = one_minus_x * &(&one + x) * (&one + &x2);
            &one / prod.sqrt()
        },
        wp,
        12,
    )
}

#[test]
fn agm_value_against_quadrature() {
    // π / agm(1, √2) = 2 ∫₀¹ dx/√(1-x⁴), 40+ digits
    let digits = 45;
    let bits = periodlab_core::bits_for_digits(digits);
    let wp = bits + 48;
    let quad = lemniscatic_integral(wp) * Float::from(2);

    let s2 = Real::from_integer(2, wp).try_sqrt().unwrap();
    let m = agm(&Real::one(wp), &s2, bits + 16).unwrap();
    let mine = compute_pi(wp).try_div(&m).unwrap();

    let d = mine.value().clone() - quad;
    let d = if d < Float::ZERO { -d } else { d };
    assert!(
        d < pow2(-(bits as i64)),
        "agm route vs quadrature differ by {d:?}"
    );
    // frozen leading digits from the quadrature
    let (digits_str, e10, _) = mine.decimal_digits(17).unwrap();
    assert_eq!((digits_str.as_str(), e10), ("26220575542921198", 0));
}

#[test]
fn lemniscatic_omega1_against_quadrature() {
    // ω₁ of y² = 4x³ - 4x equals 2∫₁^∞ dx/√(4x³-4x) = 2∫₀¹ ds/√(1-s⁴)
    let digits = 42;
    let bits = periodlab_core::bits_for_digits(digits);
    let wp = bits + 48;
    let quad = lemniscatic_integral(wp) * Float::from(2);

    let curve = EllipticCurveQ::new("4".parse().unwrap(), "0".parse().unwrap()).unwrap();
    let data = elliptic_periods(&curve, bits + 16).unwrap();

    let d = data.omega1.re.value().clone() - quad;
    let d = if d < Float::ZERO { -d } else { d };
    assert!(
        d < pow2(-(bits as i64)),
        "omega1 vs quadrature differ by {d:?}"
    );
    assert!(data.omega1.im.stored_abs_le_pow2(-(bits as i64)));
}
