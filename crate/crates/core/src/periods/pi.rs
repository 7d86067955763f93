//! π by the Gauss-Legendre (Brent-Salamin) AGM iteration.

use std::sync::LazyLock;


use crate::memo::PrecisionCache;
use crate::real::{Float, Real, pow2, working_bits};

static PI_CACHE: LazyLock<PrecisionCache<()>> = LazyLock::new(PrecisionCache::new);

/// Raw π at `wp` bits (a few ulps), memoized process-wide.
pub fn pi_float(wp: usize) -> Float {
    PI_CACHE.get_or_compute((), wp, || gauss_legendre(wp + 16))
}

fn gauss_legendre(wp: usize) -> Float {
    let one = Float::ONE.with_precision(wp).value();
    let half = pow2(-1);
    let mut a = one.clone();
    let mut b = (&one / Float::from(2).with_precision(wp).value()).sqrt();
    let mut t = Float::ONE.with_precision(wp).value() * pow2(-2);
    let mut p = one.clone();
    let stop = pow2(-(wp as i64) + 8);
    for _ in 0..(wp.ilog2() as usize + 8) {
        let diff = &a - &b;
        let diff = if diff < Float::ZERO { -diff } else { diff };
        if diff <= stop {
            break;
        }
        let an = (&a + &b) * &half;
        let g = (&a * &b).sqrt();
        let d = &a - &an;
        t -= &p * (&d * &d);
        a = an;
        b = g;
        p *= Float::from(2);
    }
    let s = &a + &b;
    (&s * &s) / (t * Float::from(4))
}

/// π certified to `2^-precision_bits`.
pub fn compute_pi(precision_bits: usize) -> Real {
    let wp = working_bits(precision_bits, 16);
    Real::certified(pi_float(wp), precision_bits)
}

/// π as a tracked real at working precision, for internal kernels that
/// assemble larger expressions (error well below the final certification).
pub(crate) fn pi_real_wp(wp: usize) -> Real {
    Real::with_error(
        pi_float(wp),
        crate::real::ErrorBound::Abs(-(wp as i64) + 18),
        wp,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Machin's formula with an explicit alternating-series tail bound,
    /// independent of the AGM path.
    fn machin_pi(wp: usize) -> Float {
        fn atan_inv(n: i64, wp: usize) -> Float {
            // atan(1/n) = sum (-1)^k / ((2k+1) n^(2k+1)), |tail| <= next term
            let n2 = Float::from(n * n).with_precision(wp).value();
            let mut term = Float::ONE.with_precision(wp).value() / Float::from(n);
            let mut sum = term.clone();
            let mut k = 0i64;
            let stop = pow2(-(wp as i64) - 2);
            loop {
                k += 1;
                term /= &n2;
                let contrib = &term / Float::from(2 * k + 1);
                if contrib < stop {
                    break;
                }
                if k % 2 == 1 {
                    sum -= contrib;
                } else {
                    sum += contrib;
                }
            }
            sum
        }
        let a = atan_inv(5, wp) * Float::from(16);
        let b = atan_inv(239, wp) * Float::from(4);
        a - b
    }

    #[test]
    fn agm_pi_agrees_with_machin_oracle() {
        let wp = 400;
        let mine = pi_float(wp);
        let oracle = machin_pi(wp + 16);
        let diff = mine - oracle;
        let diff = if diff < Float::ZERO { -diff } else { diff };
        assert!(diff < pow2(-(wp as i64) + 24), "AGM pi vs Machin oracle: {diff:?}");
    }

    #[test]
    fn fifty_digit_value() {
        // independent formulas agree (test above); freeze the 50-digit string
        let pi = compute_pi(200);
        let (digits, e10, neg) = pi.decimal_digits(50).unwrap();
        assert!(!neg);
        assert_eq!(e10, 0);
        assert_eq!(digits, "31415926535897932384626433832795028841971693993751");
    }

    #[test]
    fn precision_doubling() {
        let lo = compute_pi(120);
        let hi = compute_pi(240);
        let d = &lo - &hi;
        assert!(d.stored_abs_le_pow2(lo.error_exp().unwrap() + 1));
    }

    #[test]
    fn sin_of_pi_vanishes() {
        let bits = 160;
        let pi = compute_pi(bits + 40);
        let s = crate::elementary::sin_real(&pi, bits).unwrap();
        assert!(s.abs_le_pow2(-(bits as i64)), "sin(pi) = {s:?}");
    }
}
