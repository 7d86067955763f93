//! Multiple zeta values by Hölder convolution: the iterated integral is
//! split at 1/2, turning ζ(s̲) into a short sum of products of multiple
//! polylogarithms at 1/2, each an exponentially convergent sum. Direct
//! summation of the defining series needs ~10^digits terms and is kept
//! only as a coarse test oracle.

use std::sync::LazyLock;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::memo::PrecisionCache;
use crate::mzv::{BinaryWord, Composition, word_of_composition};
use crate::real::{Float, Real, pow2, working_bits};

static MZV_CACHE: LazyLock<PrecisionCache<Vec<u32>>> = LazyLock::new(PrecisionCache::new);

/// ζ(s1, ..., sk) for an admissible composition, certified to
/// `2^-precision_bits`. Depth 1 agrees with `compute_zeta`.
pub fn compute_mzv(c: &Composition, precision_bits: usize) -> Result<Real> {
    if !c.is_admissible() {
        return Err(Error::NonAdmissible);
    }
    let wp = working_bits(precision_bits, 48 + 2 * c.weight() as usize);
    let key = c.parts().to_vec();
    let v = MZV_CACHE.get_or_compute(key, wp, || holder_convolution(&word_of_composition(c), wp));
    Ok(Real::certified(v, precision_bits))
}

/// ζ(w) = Σ_{j=0}^{n} Li(reverse-dual of w[..j]; 1/2) · Li(w[j..]; 1/2).
fn holder_convolution(w: &BinaryWord, wp: usize) -> Float {
    let n = w.len();
    let mut acc = Float::ZERO.with_precision(wp).value();
    for j in 0..=n {
        let a = if j == 0 {
            Float::ONE.with_precision(wp).value()
        } else {
            let exps = w.prefix(j).reverse_dual().polylog_exponents().unwrap();
            polylog_half(&exps, wp)
        };
        let b = if j == n {
            Float::ONE.with_precision(wp).value()
        } else {
            let exps = w.suffix(j).polylog_exponents().unwrap();
            polylog_half(&exps, wp)
        };
        acc += a * b;
    }
    acc
}

/// Li_{s1,...,sk}(1/2) = Σ_{n1 > ... > nk >= 1} 2^(-n1) Π ni^(-si),
/// s1 >= 1 allowed. Cutoff N gives tail <= 2^(1-N) N^(k-1).
fn polylog_half(exps: &[u32], wp: usize) -> Float {
    let k = exps.len();
    let log_slack = (usize::BITS - (wp + 64).leading_zeros()) as usize;
    let n_max = wp + 8 + k * log_slack;

    // inner sums by dynamic programming from the innermost index outward:
    // level(m) = Σ_{n < m} n^(-s_level) * prev(n)
    let one = Float::ONE.with_precision(wp).value();
    let mut prev: Vec<Float> = vec![one.clone(); n_max + 1];
    for &s in exps.iter().rev().take(k - 1) {
        let mut cur = vec![Float::ZERO.with_precision(wp).value(); n_max + 1];
        for m in 2..=n_max {
            let nm1 = m - 1;
            cur[m] = &cur[m - 1] + &prev[nm1] / int_pow(nm1 as u64, s as u64, wp);
        }
        prev = cur;
    }
    let s1 = exps[0] as u64;
    let mut acc = Float::ZERO.with_precision(wp).value();
    #[allow(clippy::needless_range_loop)] // n1 is the summation index itself
    for n1 in k..=n_max {
        let term = &prev[n1] / int_pow(n1 as u64, s1, wp);
        acc += term * pow2(-(n1 as i64));
    }
    acc
}

fn int_pow(base: u64, exp: u64, wp: usize) -> Float {
    Float::from(IBig::from(base).pow(exp as usize))
        .with_precision(wp)
        .value()
}
