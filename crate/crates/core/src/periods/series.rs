//! Exact rational Taylor expansions: sin(x)/x and the Weierstrass σ(x)/x.

use crate::rational::{Rational, factorial};

/// First `n_terms` Taylor coefficients of sin(x)/x: 1, 0, -1/6, 0, 1/120, ...
pub fn sinc_taylor(n_terms: usize) -> Vec<Rational> {
    (0..n_terms)
        .map(|k| {
            if k % 2 == 1 {
                Rational::zero()
            } else {
                let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
                Rational::new(sign, factorial(k + 1)).unwrap()
            }
        })
        .collect()
}

/// First `n_terms` Taylor coefficients of σ(x)/x as exact rationals in
/// g2, g3: the Laurent coefficients of ℘ are integrated twice and
/// exponentiated, all over Q.
///
/// σ(x)/x = exp(P(x)) with P(x) = -Σ_{k>=2} c_k x^{2k} / (2k(2k-1)),
/// c_2 = g2/20, c_3 = g3/28, c_k = 3/((2k+1)(k-3)) Σ c_m c_{k-m}.
pub fn sigma_taylor(g2: &Rational, g3: &Rational, n_terms: usize) -> Vec<Rational> {
    if n_terms == 0 {
        return vec![];
    }
    let k_max = n_terms / 2 + 1;
    let mut c = vec![Rational::zero(); k_max.max(4)];
    if k_max > 2 {
        c[2] = g2 / &Rational::from(20);
    }
    if k_max > 3 {
        c[3] = g3 / &Rational::from(28);
    }
    for k in 4..k_max {
        let mut acc = Rational::zero();
        for m in 2..=(k - 2) {
            acc += &(c[m].clone() * c[k - m].clone());
        }
        c[k] = Rational::from(3) * acc
            / Rational::from(((2 * k + 1) * (k - 3)) as i64);
    }
    // P coefficients: p[2k] = -c_k / (2k(2k-1))
    let mut p = vec![Rational::zero(); n_terms];
    for k in 2..k_max {
        if 2 * k < n_terms {
            p[2 * k] = -c[k].clone() / Rational::from((2 * k * (2 * k - 1)) as i64);
        }
    }
    // exp of a power series: q_0 = 1, n q_n = Σ_{j=1}^{n} j p_j q_{n-j}
    let mut q = vec![Rational::zero(); n_terms];
    q[0] = Rational::one();
    for n in 1..n_terms {
        let mut acc = Rational::zero();
        for j in 1..=n {
            if !p[j].is_zero() && !q[n - j].is_zero() {
                acc += &(Rational::from(j as i64) * p[j].clone() * q[n - j].clone());
            }
        }
        q[n] = acc / Rational::from(n as i64);
    }
    q
}
