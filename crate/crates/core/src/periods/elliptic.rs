//! Elliptic period data for curves y² = 4x³ - g₂x - g₃ over Q.
//!
//! Periods: branch points from the exact cubic, then AGMs of root
//! differences (a real AGM in both discriminant signs: the negative case
//! reduces to real data through the conjugate-pair substitution).
//! Quasi-periods: E₂ q-series at the reduced τ and at -1/τ, two
//! independent series evaluations, so the Legendre identity remains a
//! genuine numerical check. Signs follow the de Rham convention
//! η_i = ∫ x dx/y, which fixes the Legendre constant to +2πi for an
//! Im τ > 0 basis.

use dashu_int::IBig;
use serde::{Deserialize, Serialize};

use crate::agm::agm;
use crate::complex::Complex;
use crate::elementary::exp_complex;
use crate::error::{Error, Result};
use crate::poly::poly_roots;
use crate::rational::Rational;
use crate::real::{Float, Real, working_bits};

use super::pi::pi_real_wp;

/// A nonsingular Weierstrass curve over Q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipticCurveQ {
    g2: Rational,
    g3: Rational,
}

impl EllipticCurveQ {
    pub fn new(g2: Rational, g3: Rational) -> Result<Self> {
        let disc = Self::discriminant_of(&g2, &g3);
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(EllipticCurveQ { g2, g3 })
    }

    pub fn g2(&self) -> &Rational {
        &self.g2
    }

    pub fn g3(&self) -> &Rational {
        &self.g3
    }

    fn discriminant_of(g2: &Rational, g3: &Rational) -> Rational {
        let g2c = g2.pow(3).unwrap();
        let g3s = g3.pow(2).unwrap();
        g2c - Rational::from(27) * g3s
    }

    /// g₂³ - 27 g₃² (exact).
    pub fn discriminant(&self) -> Rational {
        Self::discriminant_of(&self.g2, &self.g3)
    }

    /// j = 1728 g₂³ / (g₂³ - 27 g₃²) (exact).
    pub fn j_invariant(&self) -> Rational {
        let g2c = self.g2.pow(3).unwrap();
        Rational::from(1728) * g2c.clone() / self.discriminant()
    }

    /// Taylor coefficients of σ(x)/x for this curve's invariants.
    pub fn sigma_taylor(&self, n_terms: usize) -> Vec<Rational> {
        super::series::sigma_taylor(&self.g2, &self.g3, n_terms)
    }
}

impl std::fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^2 = 4x^3 - ({})x - ({})", self.g2, self.g3)
    }
}

/// Periods, quasi-periods and the reduced period ratio of a curve:
/// Im τ > 0, τ in the standard fundamental domain, and
/// ω₁η₂ - ω₂η₁ = 2πi.
#[derive(Clone, Debug)]
pub struct EllipticPeriodData {
    pub omega1: Complex,
    pub omega2: Complex,
    pub eta1: Complex,
    pub eta2: Complex,
    pub tau: Complex,
}

/// Period data certified to `2^-precision_bits` per component.
pub fn elliptic_periods(e: &EllipticCurveQ, precision_bits: usize) -> Result<EllipticPeriodData> {
    let disc = e.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularCurve);
    }
    // internal certification target, with headroom for the assembly steps
    let p_in = precision_bits + 48;
    let wp = working_bits(p_in, 32);

    // branch points of 4x³ - g₂x - g₃
    let coeffs = [
        -e.g3.clone(),
        -e.g2.clone(),
        Rational::zero(),
        Rational::from(4),
    ];
    let roots = poly_roots(&coeffs, p_in + 32)?;

    let (omega1_raw, omega2_raw) = if disc.is_positive() {
        periods_three_real_roots(&roots, p_in)?
    } else {
        periods_one_real_root(&roots, p_in)?
    };

    let tau0 = omega2_raw.try_div(&omega1_raw)?;
    let (tau, m) = reduce_tau_to_fundamental_domain(&tau0, wp)?;
    let [[a, b], [c, d]] = m;
    let omega2 = &lin_comb(&omega2_raw, &a, &omega1_raw, &b) + &Complex::zero(wp);
    let omega1 = &lin_comb(&omega2_raw, &c, &omega1_raw, &d) + &Complex::zero(wp);

    // quasi-periods from two independent E₂ series
    let pi = pi_real_wp(wp);
    let pi_sq = &pi * &pi;
    let three = Real::from_integer(3, wp);
    let e2_tau = eisenstein_series(&tau, 1, wp)?;
    let eta1_w = e2_tau
        .scale(&pi_sq)
        .try_div(&omega1.scale(&three))?;
    let minus_inv_tau = -tau.recip()?;
    let e2_s = eisenstein_series(&minus_inv_tau, 1, wp)?;
    let eta2_w = e2_s.scale(&pi_sq).try_div(&omega2.scale(&three))?;

    // de Rham sign: η_i = -η_i^{Weierstrass}
    let eta1 = -eta1_w;
    let eta2 = -eta2_w;

    let out = EllipticPeriodData {
        omega1: certify_c(&omega1, precision_bits),
        omega2: certify_c(&omega2, precision_bits),
        eta1: certify_c(&eta1, precision_bits),
        eta2: certify_c(&eta2, precision_bits),
        tau: certify_c(&tau, precision_bits),
    };
    debug_assert!(
        legendre_residual(&out, precision_bits)
            .stored_abs_le_pow2(-(precision_bits as i64) + 4),
        "Legendre residual out of bounds"
    );
    Ok(out)
}

/// ω₁η₂ - ω₂η₁ - 2πi at the data's precision.
pub fn legendre_residual(data: &EllipticPeriodData, precision_bits: usize) -> Complex {
    let wp = working_bits(precision_bits, 16);
    let pi = pi_real_wp(wp);
    let two_pi_i = Complex::new(Real::zero(wp), pi.mul_pow2(1));
    let lhs = &(&data.omega1 * &data.eta2) - &(&data.omega2 * &data.eta1);
    &lhs - &two_pi_i
}

fn certify_c(z: &Complex, precision_bits: usize) -> Complex {
    Complex::new(
        Real::certified(z.re.value().clone(), precision_bits),
        Real::certified(z.im.value().clone(), precision_bits),
    )
}

fn lin_comb(u: &Complex, cu: &IBig, v: &Complex, cv: &IBig) -> Complex {
    let bits = u.precision_bits().min(v.precision_bits());
    let a = Real::from_integer(cu.clone(), bits);
    let b = Real::from_integer(cv.clone(), bits);
    &u.scale(&a) + &v.scale(&b)
}

/// Δ > 0: three real branch points e₁ > e₂ > e₃;
/// ω₁ = π / agm(√(e₁-e₃), √(e₁-e₂)) real,
/// ω₂ = i π / agm(√(e₁-e₃), √(e₂-e₃)).
fn periods_three_real_roots(roots: &[Complex], p_in: usize) -> Result<(Complex, Complex)> {
    let mut es: Vec<Real> = roots.iter().map(|r| r.re.clone()).collect();
    es.sort_by(|x, y| {
        y.value()
            .partial_cmp(x.value())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let (e1, e2, e3) = (&es[0], &es[1], &es[2]);
    let a = (e1 - e3).try_sqrt()?;
    let b = (e1 - e2).try_sqrt()?;
    let c = (e2 - e3).try_sqrt()?;
    let wp = working_bits(p_in, 16);
    let pi = pi_real_wp(wp);
    let om1 = pi.try_div(&agm(&a, &b, p_in)?)?;
    let x = pi.try_div(&agm(&a, &c, p_in)?)?;
    Ok((
        Complex::from_real(om1),
        Complex::new(Real::zero(wp), x),
    ))
}

/// Δ < 0: one real branch point r and a conjugate pair p ± qi with
/// p = -r/2. Substituting x = r ± t² reduces both cycles to the Gauss
/// integral ∫dt/√((t²+w)(t²+w̄)), a real AGM after one conjugate step:
/// ω_re  = π / agm(√((H+c)/2), √H),  c = 3r/2, H = |r - (p+qi)|,
/// ω_im  = π / agm(√((H-c)/2), √H),
/// with lattice basis ω₁ = ω_re, ω₂ = (ω₁ + i ω_im)/2.
fn periods_one_real_root(roots: &[Complex], p_in: usize) -> Result<(Complex, Complex)> {
    let wp = working_bits(p_in, 16);
    let real_root = roots
        .iter()
        .min_by(|x, y| {
            x.im.abs()
                .value()
                .partial_cmp(y.im.abs().value())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap();
    let complex_root = roots
        .iter()
        .max_by(|x, y| {
            x.im.abs()
                .value()
                .partial_cmp(y.im.abs().value())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap();
    let r = &real_root.re;
    let q = complex_root.im.abs();
    let c = &r.mul_pow2(1) + r; // 3r
    let c = c.mul_pow2(-1); // 3r/2
    let h = (&(&c * &c) + &(&q * &q)).try_sqrt()?;
    let half = |x: &Real| x.mul_pow2(-1);
    let a_re = half(&(&h + &c)).try_sqrt()?;
    let a_im = half(&(&h - &c)).try_sqrt()?;
    let sqrt_h = h.try_sqrt()?;
    let pi = pi_real_wp(wp);
    let om_re = pi.try_div(&agm(&a_re, &sqrt_h, p_in)?)?;
    let om_im = pi.try_div(&agm(&a_im, &sqrt_h, p_in)?)?;
    let omega1 = Complex::from_real(om_re.clone());
    let omega2 = Complex::new(om_re.mul_pow2(-1), om_im.mul_pow2(-1));
    Ok((omega1, omega2))
}

/// Reduce τ (Im τ > 0) to the standard fundamental domain
/// (|Re| <= 1/2, |τ| >= 1, boundary canonicalized to Re <= 0), returning
/// the reduced value and the SL₂(Z) matrix M with τ' = M(τ); the new
/// basis is ω₂' = aω₂ + bω₁, ω₁' = cω₂ + dω₁.
pub fn reduce_tau_to_fundamental_domain(
    tau0: &Complex,
    wp: usize,
) -> Result<(Complex, [[IBig; 2]; 2])> {
    if !tau0.im.is_certainly_positive() {
        return Err(if tau0.im.is_certainly_negative() {
            Error::DomainError("period ratio has negative orientation".into())
        } else {
            Error::DegenerateLattice
        });
    }
    let mut tau = tau0.clone();
    let mut m = [[IBig::ONE, IBig::ZERO], [IBig::ZERO, IBig::ONE]];
    let eps_exp = -((wp / 2) as i64);
    for _ in 0..10_000 {
        // translate Re into [-1/2, 1/2)
        let n = round_to_ibig(tau.re.value());
        if n != IBig::ZERO {
            let shift = Real::from_integer(n.clone(), tau.precision_bits());
            tau = Complex::new(&tau.re - &shift, tau.im.clone());
            // M <- [[1, -n], [0, 1]] * M
            m = [
                [
                    m[0][0].clone() - &n * &m[1][0],
                    m[0][1].clone() - &n * &m[1][1],
                ],
                [m[1][0].clone(), m[1][1].clone()],
            ];
        }
        let norm = tau.norm_sqr();
        let one = Real::one(tau.precision_bits());
        let deficit = &one - &norm; // > 0 inside the unit circle
        let inside = deficit.value() > &crate::real::pow2(eps_exp);
        let on_circle = deficit.abs().value() <= &crate::real::pow2(eps_exp);
        let re_positive = tau.re.value() > &crate::real::pow2(eps_exp);
        if inside || (on_circle && re_positive) {
            // invert: M <- [[0, -1], [1, 0]] * M
            tau = -tau.recip()?;
            m = [
                [-m[1][0].clone(), -m[1][1].clone()],
                [m[0][0].clone(), m[0][1].clone()],
            ];
        } else {
            return Ok((tau, m));
        }
    }
    Err(Error::PrecisionExhausted(
        "fundamental domain reduction did not terminate".into(),
    ))
}

fn round_to_ibig(x: &Float) -> IBig {
    crate::real::float_round_to_ibig(x)
}

/// Normalized Eisenstein series at τ (Im τ > 0) by q-series:
/// level 1: E₂ = 1 - 24 Σ σ₁(n) qⁿ,
/// level 2: E₄ = 1 + 240 Σ σ₃(n) qⁿ,
/// level 3: E₆ = 1 - 504 Σ σ₅(n) qⁿ.
fn eisenstein_series(tau: &Complex, kind: u8, wp: usize) -> Result<Complex> {
    let pi = pi_real_wp(wp);
    let two_pi_tau = tau.scale(&pi).mul_pow2(1);
    let q = exp_complex(&two_pi_tau.mul_i(), wp)?;
    let q_mag = mag_ub(&q);
    if q_mag >= 0 {
        return Err(Error::DegenerateLattice);
    }
    let (scale, power): (i64, u32) = match kind {
        1 => (-24, 1),
        2 => (240, 3),
        3 => (-504, 5),
        _ => unreachable!(),
    };
    let target = -(wp as i64) - 10;
    let mut acc = Complex::zero(wp);
    let mut qn = q.clone();
    let mut n: u64 = 1;
    let max_terms = 64 * wp as u64;
    loop {
        let sig = Real::from_integer(divisor_sum(n, power), wp);
        acc = &acc + &qn.scale(&sig);
        // remaining tail: sigma_k(m) <= m^(k+1) <= 2^(7 log2 m); geometric in q
        let tail_exp = mag_ub(&qn) + q_mag + 7 * (64 - (n + 1).leading_zeros() as i64) + 4;
        if tail_exp < target {
            break;
        }
        qn = &qn * &q;
        n += 1;
        if n > max_terms {
            return Err(Error::PrecisionExhausted(
                "Eisenstein q-series converges too slowly (Im tau too small)".into(),
            ));
        }
    }
    let coeff = Real::from_integer(scale, wp);
    Ok(&Complex::one(wp) + &acc.scale(&coeff))
}

fn mag_ub(z: &Complex) -> i64 {
    z.re.mag_upper().unwrap_or(i64::MIN / 4).max(z.im.mag_upper().unwrap_or(i64::MIN / 4)) + 1
}

fn divisor_sum(n: u64, k: u32) -> IBig {
    let mut acc = IBig::ZERO;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += IBig::from(d).pow(k as usize);
            let e = n / d;
            if e != d {
                acc += IBig::from(e).pow(k as usize);
            }
        }
        d += 1;
    }
    acc
}

/// Lattice Eisenstein sums g₂ = 60 Σ' ω⁻⁴ and g₃ = 140 Σ' ω⁻⁶ for the
/// lattice Zω₁ + Zω₂, via E₄/E₆ q-series after τ-reduction. Direct lattice
/// summation is only used as a test oracle.
pub fn eisenstein_g2_g3(
    omega1: &Complex,
    omega2: &Complex,
    precision_bits: usize,
) -> Result<(Complex, Complex)> {
    let wp = working_bits(precision_bits + 32, 32);
    let tau0 = omega2.try_div(omega1)?;
    let (tau, m) = reduce_tau_to_fundamental_domain(&tau0, wp)?;
    let [[_, _], [c, d]] = m;
    let om1 = lin_comb(omega2, &c, omega1, &d);

    let pi = pi_real_wp(wp);
    let pi2 = &pi * &pi;
    let pi4 = &pi2 * &pi2;
    let pi6 = &pi4 * &pi2;
    let e4 = eisenstein_series(&tau, 2, wp)?;
    let e6 = eisenstein_series(&tau, 3, wp)?;

    let om1_2 = &om1 * &om1;
    let om1_4 = &om1_2 * &om1_2;
    let om1_6 = &om1_4 * &om1_2;
    let g2_coeff = Rational::new(4, 3).unwrap().to_real(wp) * pi4;
    let g3_coeff = Rational::new(8, 27).unwrap().to_real(wp) * pi6;
    let g2 = e4.scale(&g2_coeff).try_div(&om1_4)?;
    let g3 = e6.scale(&g3_coeff).try_div(&om1_6)?;
    Ok((certify_c(&g2, precision_bits), certify_c(&g3, precision_bits)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::pow2;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn curve(g2: &str, g3: &str) -> EllipticCurveQ {
        EllipticCurveQ::new(rat(g2), rat(g3)).unwrap()
    }

    #[test]
    fn singular_curve_rejected() {
        assert!(matches!(
            EllipticCurveQ::new(rat("3"), rat("1")),
            Err(Error::SingularCurve)
        ));
        assert!(matches!(
            EllipticCurveQ::new(rat("0"), rat("0")),
            Err(Error::SingularCurve)
        ));
    }

    #[test]
    fn j_invariants() {
        assert_eq!(curve("4", "0").j_invariant(), rat("1728"));
        assert_eq!(curve("0", "4").j_invariant(), rat("0"));
        assert_eq!(curve("4", "4").j_invariant(), rat("-6912/23"));
    }

    #[test]
    fn lemniscatic_periods() {
        // (4,0): ω₁ = π/agm(√2, 1) real, τ = i
        let bits = 200;
        let data = elliptic_periods(&curve("4", "0"), bits).unwrap();
        let s2 = Real::from_integer(2, bits + 60).try_sqrt().unwrap();
        let m = agm(&s2, &Real::one(bits + 60), bits + 20).unwrap();
        let want = pi_real_wp(bits + 40).try_div(&m).unwrap();
        let d = &data.omega1.re - &want;
        assert!(d.is_zero_within_error() && d.error_exp().unwrap() < -(bits as i64) + 8);
        assert!(data.omega1.im.stored_abs_le_pow2(-(bits as i64) + 4));
        // 2.6220575542921198104648395898911194136827549514316...
        let (digits, e10, _) = data.omega1.re.decimal_digits(17).unwrap();
        assert_eq!((digits.as_str(), e10), ("26220575542921198", 0));
        // τ = i
        assert!(data.tau.re.stored_abs_le_pow2(-(bits as i64) + 4));
        assert!((&data.tau.im - &Real::one(bits)).stored_abs_le_pow2(-(bits as i64) + 4));
    }

    #[test]
    fn hexagonal_tau() {
        // (0,4): τ equivalent to e^{2πi/3}: Re = -1/2, Im = √3/2
        let bits = 160;
        let data = elliptic_periods(&curve("0", "4"), bits).unwrap();
        let half = rat("1/2").to_real(bits + 40);
        assert!((&data.tau.re + &half).stored_abs_le_pow2(-(bits as i64) + 6));
        let im_sq = &data.tau.im * &data.tau.im;
        let want = rat("3/4").to_real(bits + 40);
        assert!((&im_sq - &want).stored_abs_le_pow2(-(bits as i64) + 6));
    }

    #[test]
    fn legendre_relation_both_signs() {
        let bits = 180;
        for (g2, g3) in [("4", "0"), ("0", "4"), ("4", "4"), ("-3", "2/5")] {
            let data = elliptic_periods(&curve(g2, g3), bits).unwrap();
            let res = legendre_residual(&data, bits);
            assert!(
                res.stored_abs_le_pow2(-(bits as i64) + 6),
                "Legendre residual too large for ({g2}, {g3}): {:?}",
                res.to_f64_pair()
            );
        }
    }

    #[test]
    fn eisenstein_round_trip() {
        let bits = 170;
        for (g2s, g3s) in [("4", "0"), ("0", "4"), ("4", "4"), ("7/2", "-2")] {
            let e = curve(g2s, g3s);
            let data = elliptic_periods(&e, bits + 30).unwrap();
            let (g2, g3) = eisenstein_g2_g3(&data.omega1, &data.omega2, bits).unwrap();
            let want2 = rat(g2s).to_real(bits + 40);
            let want3 = rat(g3s).to_real(bits + 40);
            assert!(
                (&g2.re - &want2).stored_abs_le_pow2(-(bits as i64) + 8),
                "g2 mismatch for ({g2s},{g3s}): got {}",
                g2.re
            );
            assert!(g2.im.stored_abs_le_pow2(-(bits as i64) + 8));
            assert!(
                (&g3.re - &want3).stored_abs_le_pow2(-(bits as i64) + 8),
                "g3 mismatch for ({g2s},{g3s}): got {}",
                g3.re
            );
            assert!(g3.im.stored_abs_le_pow2(-(bits as i64) + 8));
        }
    }

    #[test]
    fn lattice_symmetries() {
        let bits = 140;
        // square lattice: g3 = 0
        let one = Complex::one(bits + 60);
        let i = Complex::i(bits + 60);
        let (_, g3) = eisenstein_g2_g3(&one, &i, bits).unwrap();
        assert!(g3.stored_abs_le_pow2(-(bits as i64) + 6), "square lattice g3");
        // hexagonal lattice: g2 = 0
        let half = rat("-1/2").to_real(bits + 60);
        let im = rat("3/4").to_real(bits + 60).try_sqrt().unwrap();
        let rho = Complex::new(half, im);
        let (g2, _) = eisenstein_g2_g3(&one, &rho, bits).unwrap();
        assert!(g2.stored_abs_le_pow2(-(bits as i64) + 6), "hexagonal lattice g2");
    }

    #[test]
    fn direct_lattice_sum_oracle() {
        // G4 = Σ'(m + nτ)^-4 summed directly over a box, low precision
        let bits = 96;
        let one = Complex::one(bits + 200);
        let two_i = Complex::new(Real::zero(bits + 200), Real::from_integer(2, bits + 200));
        let (g2, _) = eisenstein_g2_g3(&one, &two_i, bits).unwrap();
        let n_box: i64 = 60;
        let mut acc = Complex::zero(256);
        for mm in -n_box..=n_box {
            for nn in -n_box..=n_box {
                if mm == 0 && nn == 0 {
                    continue;
                }
                let w = Complex::new(
                    Real::from_integer(mm, 256),
                    Real::from_integer(2 * nn, 256),
                );
                let w2 = &w * &w;
                let w4 = &w2 * &w2;
                acc = &acc + &w4.recip().unwrap();
            }
        }
        let g2_direct = acc.scale(&Real::from_integer(60, 256));
        // box truncation error ~ C/N²: only a coarse consistency check
        let d = &g2.re - &g2_direct.re;
        let tail = 60.0 * 2.0 / (n_box as f64 * n_box as f64);
        assert!(
            d.abs().to_f64() < tail,
            "direct lattice sum vs q-series: {} (bound {tail})",
            d.abs().to_f64()
        );
    }

    #[test]
    fn quasi_period_magm_oracle() {
        // Δ > 0: classical E/K route via the c²-sum AGM (Bartky-style):
        // η₁ = -(2 A E - e₁ ω₁) with A = √(e₁-e₃), k² = (e₂-e₃)/(e₁-e₃)
        let bits = 150;
        for (g2s, g3s) in [("4", "0"), ("5", "1/3")] {
            let e = curve(g2s, g3s);
            assert!(e.discriminant().is_positive());
            let data = elliptic_periods(&e, bits + 20).unwrap();
            let wp = bits + 100;
            let roots = poly_roots(
                &[
                    -e.g3().clone(),
                    -e.g2().clone(),
                    Rational::zero(),
                    Rational::from(4),
                ],
                wp,
            )
            .unwrap();
            let mut es: Vec<Float> = roots.iter().map(|r| r.re.value().clone()).collect();
            es.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let a2 = &es[0] - &es[2];
            let big_a = a2.clone().with_precision(wp).value().sqrt_ref();
            let kprime = ((&es[0] - &es[1]) / &a2)
                .with_precision(wp)
                .value()
                .sqrt_ref();
            let k = ((&es[1] - &es[2]) / &a2)
                .with_precision(wp)
                .value()
                .sqrt_ref();
            let (magm, csum) = crate::agm::agm_with_c_sum(
                &Float::ONE.with_precision(wp).value(),
                &kprime,
                &k,
                wp,
            );
            let pi = super::super::pi::pi_float(wp);
            let big_k = &pi / (&magm * Float::from(2));
            let big_e = &big_k * (Float::ONE.with_precision(wp).value() - csum);
            // η₁ = -(2 A E - e₁ ω₁)
            let om1 = data.omega1.re.value().clone();
            let eta1_oracle = -((&big_a * &big_e) * Float::from(2) - &es[0] * &om1);
            let d = data.eta1.re.value().clone() - eta1_oracle;
            let d = if d < Float::ZERO { -d } else { d };
            assert!(
                d < pow2(-(bits as i64)),
                "quasi-period AGM oracle mismatch for ({g2s},{g3s})"
            );
        }
    }

    #[test]
    fn eisenstein_rejects_degenerate() {
        let bits = 96;
        let one = Complex::one(bits + 40);
        let two = &one + &one;
        assert!(matches!(
            eisenstein_g2_g3(&one, &two, bits),
            Err(Error::DegenerateLattice) | Err(Error::DomainError(_))
        ));
    }

    trait SqrtRef {
        fn sqrt_ref(&self) -> Float;
    }
    impl SqrtRef for Float {
        fn sqrt_ref(&self) -> Float {
            self.sqrt()
        }
    }
}
