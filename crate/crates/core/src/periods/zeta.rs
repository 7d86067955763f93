//! Riemann zeta at integers s >= 2 by Euler-Maclaurin summation with an
//! explicit remainder-term count chosen from the precision.

use std::sync::{LazyLock, Mutex};

use dashu_float::ops::EstimatedLog2;
use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::memo::PrecisionCache;
use crate::rational::{Rational, binomial};
use crate::real::{Float, Real, pow2, working_bits};

static BERNOULLI: LazyLock<Mutex<Vec<Rational>>> = LazyLock::new(|| {
    Mutex::new(vec![
        Rational::one(),
        Rational::new(-1, 2).unwrap(),
    ])
});

/// Exact Bernoulli number B_n (B_1 = -1/2 convention), cached.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap();
    while cache.len() <= n {
        let m = cache.len();
        if m % 2 == 1 {
            cache.push(Rational::zero());
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = Rational::zero();
        for (j, b) in cache.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            acc += &(Rational::from_integer(binomial(m + 1, j)) * b.clone());
        }
        let bm = -acc / Rational::from((m + 1) as i64);
        cache.push(bm);
    }
    cache[n].clone()
}

static ZETA_CACHE: LazyLock<PrecisionCache<u32>> = LazyLock::new(PrecisionCache::new);

/// ζ(s) for integer s >= 2 certified to `2^-precision_bits`.
pub fn compute_zeta(s: i64, precision_bits: usize) -> Result<Real> {
    if s < 2 {
        return Err(Error::DomainError(format!(
            "zeta requires s >= 2, got {s} (s = 1 diverges)"
        )));
    }
    let wp = working_bits(precision_bits, 24);
    let v = ZETA_CACHE.get_or_compute(s as u32, wp, || zeta_euler_maclaurin(s as u64, wp));
    Ok(Real::certified(v, precision_bits))
}

fn zeta_euler_maclaurin(s: u64, wp: usize) -> Float {
    let target_exp = -(wp as i64) - 6;
    // large s: the direct sum alone reaches the target quickly
    let mut n = initial_cutoff(s, wp);
    loop {
        if let Some(v) = attempt(s, n, wp, target_exp) {
            return v;
        }
        n *= 2;
    }
}

fn initial_cutoff(s: u64, wp: usize) -> u64 {
    // terms n^-s fall below 2^-wp once s*log2(n) > wp
    let direct = (2f64).powf(wp as f64 / s as f64).ceil();
    let em = 0.4 * wp as f64;
    (direct.min(em).ceil() as u64).clamp(8, 1 << 22)
}

/// One Euler-Maclaurin attempt at cutoff N; `None` if the asymptotic
/// correction series stops decreasing before reaching the target.
fn attempt(s: u64, n: u64, wp: usize, target_exp: i64) -> Option<Float> {
    let one = Float::ONE.with_precision(wp).value();
    let nf = Float::from(n).with_precision(wp).value();

    let mut sum = Float::ZERO.with_precision(wp).value();
    for k in 1..n {
        sum += &one / int_pow(k, s, wp);
    }
    let n_pow_s = int_pow(n, s, wp);
    // N^-s / 2 + N^(1-s) / (s-1)
    sum += (&one / &n_pow_s) * pow2(-1);
    sum += (&nf / &n_pow_s) / Float::from(s - 1);

    // correction terms T_k = B_2k/(2k)! * (s)_(2k-1) * N^(-s-2k+1);
    // the remainder is bounded by the first omitted term.
    let mut poch = Float::from(s).with_precision(wp).value(); // (s)_1
    let mut fact = Float::from(2).with_precision(wp).value(); // (2k)! at k=1
    let mut n_pow = &n_pow_s * &nf; // N^(s+2k-1) at k=1
    let n_sq = &nf * &nf;
    let mut last_mag = i64::MAX;
    let mut corr = Float::ZERO.with_precision(wp).value();
    for k in 1..(wp as u64) {
        let b = bernoulli(2 * k as usize);
        let bf = b.to_float(wp);
        let term = (&bf * &poch / &fact) / &n_pow;
        let mag = mag_exp(&term);
        if mag <= target_exp {
            // remainder <= |first omitted term| <= 2^target
            return Some(sum + corr);
        }
        if mag >= last_mag {
            return None; // divergence point reached before target: raise N
        }
        last_mag = mag;
        corr += term;
        // advance: (s)_(2k+1) = (s)_(2k-1) * (s+2k-1)(s+2k)
        poch = poch * Float::from(s + 2 * k - 1) * Float::from(s + 2 * k);
        fact = fact * Float::from(2 * k + 1) * Float::from(2 * k + 2);
        n_pow *= &n_sq;
    }
    None
}

fn int_pow(base: u64, exp: u64, wp: usize) -> Float {
    Float::from(IBig::from(base).pow(exp as usize))
        .with_precision(wp)
        .value()
}

fn mag_exp(x: &Float) -> i64 {
    if x == &Float::ZERO {
        i64::MIN / 2
    } else {
        x.log2_bounds().1.ceil() as i64
    }
}
