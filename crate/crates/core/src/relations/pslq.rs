//! PSLQ integer relation detection with γ = √(4/3), following Bailey's
//! formulation (float y/H, exact integer A/B), plus the honesty layer the
//! relation ledger depends on: every candidate is re-verified by
//! recomputing the inputs at doubled precision, and the only claims ever
//! emitted are "found (re-verified)" or "excluded up to a norm bound at
//! this precision".

use dashu_int::IBig;
use dashu_int::ops::Gcd;

use crate::error::{Error, Result};
use crate::real::{Float, Real, pow2, working_bits};

use super::source::NamedValue;

/// Default detection threshold: 2^(-0.9 * precision_bits).
pub fn default_threshold_exp(precision_bits: usize) -> i64 {
    -((9 * precision_bits / 10) as i64)
}

#[derive(Clone)]
pub struct RelationQuery {
    pub values: Vec<NamedValue>,
    pub precision_bits: usize,
    /// Max-norm bound B on coefficient vectors of interest.
    pub max_coeff_norm: u64,
    /// Override of [`default_threshold_exp`].
    pub detect_threshold_exp: Option<i64>,
}

#[derive(Clone, Debug)]
pub enum RelationOutcome {
    /// A re-verified integer relation (primitive, first nonzero > 0).
    Found {
        coefficients: Vec<IBig>,
        /// |Σ a_i x_i| bound at re-verification precision (2x search).
        residual_exp: i64,
    },
    /// No relation with max-norm <= exclusion_norm at this precision.
    Excluded { exclusion_norm: u64 },
}

#[derive(Clone, Debug)]
pub struct RelationResult {
    pub outcome: RelationOutcome,
    pub iterations: usize,
    pub diagnostics: Vec<String>,
}

/// Run PSLQ over the query's values.
pub fn pslq(query: &RelationQuery) -> Result<RelationResult> {
    let n = query.values.len();
    if n < 2 {
        return Err(Error::DomainError("pslq needs at least 2 values".into()));
    }
    let p = query.precision_bits;
    let threshold = query
        .detect_threshold_exp
        .unwrap_or_else(|| default_threshold_exp(p));

    // precondition: certified input error well below the threshold
    let xs: Vec<Real> = query
        .values
        .iter()
        .map(|v| v.eval(p))
        .collect::<Result<_>>()?;
    for (v, x) in query.values.iter().zip(&xs) {
        if let Some(e) = x.error_exp()
            && e > threshold - 10 {
                return Err(Error::InsufficientPrecision(format!(
                    "value {} certified only to 2^{e}, threshold is 2^{threshold}",
                    v.name()
                )));
            }
    }

    // trivial case: a certified zero among the inputs
    for (i, x) in xs.iter().enumerate() {
        if x.abs_le_pow2(threshold) {
            let mut coeffs = vec![IBig::ZERO; n];
            coeffs[i] = IBig::ONE;
            let (residual_exp, ok) = verify(query, &coeffs)?;
            if ok {
                return Ok(RelationResult {
                    outcome: RelationOutcome::Found { coefficients: coeffs, residual_exp },
                    iterations: 0,
                    diagnostics: vec![format!("input {i} is zero to threshold")],
                });
            }
        }
    }

    let wp = working_bits(p, 64);
    let raw: Vec<Float> = xs
        .iter()
        .map(|x| x.value().clone().with_precision(wp).value())
        .collect();
    let mut diagnostics = Vec::new();

    match pslq_core(&raw, threshold, query.max_coeff_norm, wp) {
        CoreOutcome::Candidate { coefficients, iterations } => {
            let coeffs = normalize_primitive(coefficients);
            let (residual_exp, ok) = verify(query, &coeffs)?;
            if ok {
                Ok(RelationResult {
                    outcome: RelationOutcome::Found { coefficients: coeffs, residual_exp },
                    iterations,
                    diagnostics,
                })
            } else {
                diagnostics.push(format!(
                    "candidate {:?} failed re-verification (residual 2^{residual_exp}); reported as excluded",
                    coeffs
                ));
                Ok(RelationResult {
                    outcome: RelationOutcome::Excluded { exclusion_norm: 0 },
                    iterations,
                    diagnostics,
                })
            }
        }
        CoreOutcome::NormExceeded { bound, iterations } => Ok(RelationResult {
            outcome: RelationOutcome::Excluded {
                exclusion_norm: bound.max(query.max_coeff_norm),
            },
            iterations,
            diagnostics,
        }),
        CoreOutcome::OutOfIterations { iterations } => Err(Error::InsufficientPrecision(format!(
            "pslq made no decision in {iterations} iterations at {p} bits"
        ))),
    }
}

enum CoreOutcome {
    Candidate { coefficients: Vec<IBig>, iterations: usize },
    NormExceeded { bound: u64, iterations: usize },
    OutOfIterations { iterations: usize },
}

fn pslq_core(x: &[Float], threshold: i64, max_norm: u64, wp: usize) -> CoreOutcome {
    let n = x.len();
    let tol = pow2(threshold);
    let zero = || Float::ZERO.with_precision(wp).value();

    // partial norms s_k and normalized y
    let mut s = vec![zero(); n];
    let mut acc = zero();
    for k in (0..n).rev() {
        acc += &x[k] * &x[k];
        s[k] = acc.clone().sqrt();
    }
    let s0 = s[0].clone();
    let mut y: Vec<Float> = x.iter().map(|v| v / &s0).collect();
    for v in s.iter_mut() {
        *v = &*v / &s0;
    }

    // H: n x (n-1)
    let mut h = vec![vec![zero(); n - 1]; n];
    for j in 0..(n - 1) {
        h[j][j] = &s[j + 1] / &s[j];
        for i in (j + 1)..n {
            h[i][j] = -(&y[i] * &y[j]) / (&s[j] * &s[j + 1]);
        }
    }

    let mut a: Vec<Vec<IBig>> = (0..n)
        .map(|i| (0..n).map(|j| IBig::from((i == j) as u8)).collect())
        .collect();
    let mut b = a.clone();

    // full initial Hermite reduction
    for i in 1..n {
        for j in (0..i).rev() {
            reduce_step(i, j, &mut y, &mut h, &mut a, &mut b, wp);
        }
    }

    let gamma = (Float::from(4).with_precision(wp).value() / Float::from(3)).sqrt();
    let max_iter = 60_000 + 2_000 * n;
    for iteration in 0..max_iter {
        // candidate: smallest |y|
        let (best, ymin) = y
            .iter()
            .enumerate()
            .map(|(i, v)| (i, abs_f(v)))
            .min_by(|p, q| p.1.partial_cmp(&q.1).unwrap())
            .unwrap();
        if ymin < tol {
            let coeffs: Vec<IBig> = (0..n).map(|i| b[i][best].clone()).collect();
            if coeffs.iter().any(|c| *c != IBig::ZERO) {
                return CoreOutcome::Candidate { coefficients: coeffs, iterations: iteration };
            }
        }

        // relation norm lower bound: 1 / max |H entries| (Euclidean)
        let mut max_h = zero();
        for row in &h {
            for v in row {
                let av = abs_f(v);
                if av > max_h {
                    max_h = av;
                }
            }
        }
        if max_h > Float::ZERO {
            let bound = Float::ONE.with_precision(wp).value() / &max_h;
            let sqrt_n = Float::from(n as i64).with_precision(wp).value().sqrt();
            let max_norm_bound = bound / sqrt_n;
            if max_norm_bound > Float::from(max_norm) * Float::from(2) {
                let certified = max_norm_bound.to_f64().value();
                let certified = if certified.is_finite() && certified < u64::MAX as f64 {
                    certified as u64
                } else {
                    u64::MAX
                };
                return CoreOutcome::NormExceeded { bound: certified, iterations: iteration };
            }
        }

        // step 1: pivot
        let mut m = 0;
        let mut best_size = Float::from(-1).with_precision(wp).value();
        let mut gp = gamma.clone();
        for (i, row) in h.iter().enumerate().take(n - 1) {
            let size = &gp * abs_f(&row[i]);
            if size > best_size {
                best_size = size;
                m = i;
            }
            gp = &gp * &gamma;
        }

        // step 2: swap
        y.swap(m, m + 1);
        h.swap(m, m + 1);
        a.swap(m, m + 1);
        for row in b.iter_mut() {
            row.swap(m, m + 1);
        }

        // step 3: corner
        if m + 2 < n {
            let t0 = (&h[m][m] * &h[m][m] + &h[m][m + 1] * &h[m][m + 1]).sqrt();
            if t0 == Float::ZERO {
                return CoreOutcome::OutOfIterations { iterations: iteration };
            }
            let t1 = &h[m][m] / &t0;
            let t2 = &h[m][m + 1] / &t0;
            for row in h.iter_mut().skip(m) {
                let t3 = row[m].clone();
                let t4 = row[m + 1].clone();
                row[m] = &t1 * &t3 + &t2 * &t4;
                row[m + 1] = -(&t2 * &t3) + &t1 * &t4;
            }
        }

        // step 4: reduce
        for i in (m + 1)..n {
            let j_hi = (i - 1).min(m + 1);
            for j in (0..=j_hi).rev() {
                reduce_step(i, j, &mut y, &mut h, &mut a, &mut b, wp);
            }
        }
    }
    CoreOutcome::OutOfIterations { iterations: max_iter }
}

fn reduce_step(
    i: usize,
    j: usize,
    y: &mut [Float],
    h: &mut [Vec<Float>],
    a: &mut [Vec<IBig>],
    b: &mut [Vec<IBig>],
    wp: usize,
) {
    if h[j][j] == Float::ZERO {
        return;
    }
    let t = crate::real::float_round_to_ibig(&(&h[i][j] / &h[j][j]));
    if t == IBig::ZERO {
        return;
    }
    let tf = Float::from(t.clone()).with_precision(wp).value();
    y[j] = &y[j] + &tf * &y[i];
    #[allow(clippy::needless_range_loop)] // k mirrors the algorithm's indexing
    for k in 0..=j {
        h[i][k] = &h[i][k] - &tf * &h[j][k];
    }
    let n = a.len();
    for k in 0..n {
        let d = &t * &a[j][k];
        a[i][k] -= d;
        let d2 = &t * &b[k][i];
        b[k][j] += d2;
    }
}

fn abs_f(x: &Float) -> Float {
    if x < &Float::ZERO { -x.clone() } else { x.clone() }
}

/// Divide by the gcd and make the first nonzero coefficient positive.
pub fn normalize_primitive(mut coeffs: Vec<IBig>) -> Vec<IBig> {
    let mut g = IBig::ZERO;
    for c in &coeffs {
        if *c != IBig::ZERO {
            let (_, mag) = c.clone().into_parts();
            g = if g == IBig::ZERO {
                IBig::from(mag)
            } else {
                IBig::from(g.gcd(IBig::from(mag)))
            };
        }
    }
    if g > IBig::ONE {
        for c in coeffs.iter_mut() {
            *c = &*c / &g;
        }
    }
    if let Some(first) = coeffs.iter().find(|c| **c != IBig::ZERO)
        && *first < IBig::ZERO {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
    coeffs
}

/// Re-verify a candidate at doubled precision. Returns the residual
/// magnitude bound exponent and whether it beats the verification bar
/// (2^(-1.4 * precision_bits)).
fn verify(query: &RelationQuery, coeffs: &[IBig]) -> Result<(i64, bool)> {
    let p2 = query.precision_bits * 2;
    let mut acc = Real::zero(p2);
    for (c, v) in coeffs.iter().zip(&query.values) {
        if *c == IBig::ZERO {
            continue;
        }
        let x = v.eval(p2)?;
        acc = &acc + &(&Real::from_integer(c.clone(), p2) * &x);
    }
    let residual_exp = acc
        .mag_upper_true()
        .unwrap_or(-(2 * p2 as i64));
    let bar = -((14 * query.precision_bits / 10) as i64);
    Ok((residual_exp, residual_exp <= bar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn query(values: Vec<NamedValue>, digits: usize, norm: u64) -> RelationQuery {
        RelationQuery {
            values,
            precision_bits: crate::bits_for_digits(digits),
            max_coeff_norm: norm,
            detect_threshold_exp: None,
        }
    }

    fn golden_ratio_values() -> Vec<NamedValue> {
        let phi = NamedValue::new("phi", |bits| {
            let five = Real::from_integer(5, bits + 16);
            let r = five.try_sqrt()?;
            Ok((&r + &Real::one(bits + 16)).mul_pow2(-1))
        });
        vec![
            NamedValue::from_rational("one", Rational::one()),
            phi.clone(),
            phi.power(2),
        ]
    }

    #[test]
    fn golden_ratio_relation() {
        // 1 + phi - phi^2 = 0
        let r = pslq(&query(golden_ratio_values(), 40, 1000)).unwrap();
        match r.outcome {
            RelationOutcome::Found { coefficients, residual_exp } => {
                let want: Vec<IBig> = [1, 1, -1].iter().map(|&x| IBig::from(x)).collect();
                assert_eq!(coefficients, want);
                assert!(residual_exp < -100);
            }
            other => panic!("expected a relation, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_independence_exclusion() {
        // 1, sqrt(2), sqrt(3): no relation with small norm
        let vals = vec![
            NamedValue::from_rational("one", Rational::one()),
            NamedValue::new("sqrt2", |bits| Real::from_integer(2, bits + 16).try_sqrt()),
            NamedValue::new("sqrt3", |bits| Real::from_integer(3, bits + 16).try_sqrt()),
        ];
        let r = pslq(&query(vals, 60, 2000)).unwrap();
        match r.outcome {
            RelationOutcome::Excluded { exclusion_norm } => {
                assert!(exclusion_norm >= 2000, "norm bound {exclusion_norm}");
            }
            other => panic!("expected exclusion, got {other:?}"),
        }
    }

    #[test]
    fn scale_invariance() {
        // multiplying all values by 7/3 leaves the found vector unchanged
        let scaled: Vec<NamedValue> = golden_ratio_values()
            .into_iter()
            .map(|v| v.scaled("7/3".parse().unwrap(), format!("{}*7/3", v.name())))
            .collect();
        let r = pslq(&query(scaled, 40, 1000)).unwrap();
        match r.outcome {
            RelationOutcome::Found { coefficients, .. } => {
                let want: Vec<IBig> = [1, 1, -1].iter().map(|&x| IBig::from(x)).collect();
                assert_eq!(coefficients, want);
            }
            other => panic!("expected a relation, got {other:?}"),
        }
    }

    #[test]
    fn zeta2_pi_squared() {
        // 6 ζ(2) - π² = 0 at 100 digits
        let vals = vec![
            NamedValue::new("zeta(2)", |bits| crate::periods::compute_zeta(2, bits)),
            NamedValue::new("pi^2", |bits| {
                let pi = crate::periods::compute_pi(bits + 16);
                Ok(&pi * &pi)
            }),
        ];
        let r = pslq(&query(vals, 100, 100)).unwrap();
        match r.outcome {
            RelationOutcome::Found { coefficients, residual_exp } => {
                let want: Vec<IBig> = [6, -1].iter().map(|&x| IBig::from(x)).collect();
                assert_eq!(coefficients, want);
                // residual at 2x precision must beat 10^-90 ~ 2^-299
                assert!(residual_exp < -299, "residual 2^{residual_exp}");
            }
            other => panic!("expected Euler relation, got {other:?}"),
        }
    }

    #[test]
    fn insufficient_precision_rejected() {
        let fuzzy = NamedValue::new("fuzzy", |_bits| {
            Ok(Real::with_error(
                Float::ONE.with_precision(64).value(),
                crate::real::ErrorBound::Abs(-20),
                64,
            ))
        });
        let vals = vec![fuzzy, NamedValue::from_rational("one", Rational::one())];
        assert!(matches!(
            pslq(&query(vals, 50, 100)),
            Err(Error::InsufficientPrecision(_))
        ));
    }

    #[test]
    fn zero_input_yields_unit_vector() {
        let vals = vec![
            NamedValue::from_rational("zero", Rational::zero()),
            NamedValue::from_rational("one", Rational::one()),
        ];
        let r = pslq(&query(vals, 40, 100)).unwrap();
        match r.outcome {
            RelationOutcome::Found { coefficients, .. } => {
                assert_eq!(coefficients[0], IBig::ONE);
                assert_eq!(coefficients[1], IBig::ZERO);
            }
            other => panic!("{other:?}"),
        }
    }
}
