//! The acceptance suite: twelve numbered criteria, each with its pinned
//! tolerance and (where stated) time budget. `suite acceptance` prints one
//! pass/fail line per criterion; the `acceptance` test target asserts all
//! of them.

use std::sync::OnceLock;
use std::time::Instant;

use dashu_int::IBig;
use periodlab_core::agm::agm;
use periodlab_core::galois::{
    PeriodSpec, RelationClass, consistency_probe, describe, detect_cm,
};
use periodlab_core::mzv::{
    Composition, admissible_compositions, derived_zagier_series, double_shuffle_relations,
    shuffle_compositions, stuffle,
};
use periodlab_core::periods::{
    EllipticCurveQ, EllipticPeriodData, compute_mzv, compute_pi, compute_zeta,
    eisenstein_g2_g3, elliptic_periods, hypergeometric_pfq, legendre_residual, sigma_taylor,
    sinc_taylor,
};
use periodlab_core::rational::Rational;
use periodlab_core::real::Real;
use periodlab_core::relations::{
    CensusParams, NamedValue, RelationOutcome, RelationQuery, monomial_census,
    normalize_primitive, pslq,
};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

pub struct Criterion {
    pub number: usize,
    pub name: &'static str,
    pub pass: bool,
    pub details: String,
    pub elapsed_s: f64,
}

type CriterionFn = fn() -> Result<String, String>;

const CRITERIA: [(usize, &str, Option<f64>, CriterionFn); 12] = [
    (1, "zagier-sequence", Some(1.0), c01_zagier),
    (2, "weight4-double-shuffle", Some(10.0), c02_weight4),
    (3, "euler-pslq", Some(30.0), c03_euler),
    (4, "legendre-random-curves", Some(60.0), c04_legendre),
    (5, "eisenstein-round-trip", Some(60.0), c05_eisenstein),
    (6, "gauss-hypergeometric-agm", None, c06_gauss),
    (7, "cm-detection", Some(30.0), c07_cm),
    (8, "planted-relations", None, c08_planted),
    (9, "exclusion-honesty", None, c09_exclusion),
    (10, "series-facts", None, c10_series),
    (11, "algebra-laws", None, c11_algebra),
    (12, "ledger-conformance", None, c12_ledger),
];

/// Run the suite; returns (exit code, rendered output).
pub fn run_suite(only: Option<usize>, json: bool) -> (i32, String) {
    let mut out = String::new();
    let mut all_pass = true;
    let results = run_criteria(only);
    for c in &results {
        all_pass &= c.pass;
        if json {
            let v = serde_json::json!({
                "kind": "criterion",
                "number": c.number,
                "name": c.name,
                "pass": c.pass,
                "details": c.details,
                "elapsed_s": c.elapsed_s,
                "nondeterministic": ["elapsed_s"],
            });
            out.push_str(&serde_json::to_string(&v).unwrap());
            out.push('\n');
        } else {
            out.push_str(&format!(
                "[{:>2}/12] {} {} — {}\n",
                c.number,
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.details
            ));
        }
    }
    if !json {
        out.push_str(if all_pass {
            "acceptance: all criteria passed\n"
        } else {
            "acceptance: FAILURES present\n"
        });
    }
    (if all_pass { 0 } else { 1 }, out)
}

/// Run criteria (optionally a single one) and collect reports.
pub fn run_criteria(only: Option<usize>) -> Vec<Criterion> {
    let mut results = Vec::new();
    for (number, name, budget, f) in CRITERIA {
        if let Some(k) = only
            && k != number {
                continue;
            }
        let t0 = Instant::now();
        let outcome = f();
        let elapsed = t0.elapsed().as_secs_f64();
        let (mut pass, mut details) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if let Some(limit) = budget
            && elapsed > limit {
                pass = false;
                details = format!("{details}; TIME {elapsed:.2}s exceeds budget {limit}s");
            }
        results.push(Criterion { number, name, pass, details, elapsed_s: elapsed });
    }
    results
}

fn pow10_exp_to_pow2(p: i64) -> i64 {
    // 10^p >= 2^floor(p*log2(10)); conservative for negative p
    (p as f64 * std::f64::consts::LOG2_10).floor() as i64
}

// --- criterion 1 --------------------------------------------------------

fn c01_zagier() -> Result<String, String> {
    let (code, output) = crate::run([
        "periodlab", "mzv", "dims", "--max-weight", "12", "--rank-up-to", "8",
    ]);
    if code != 0 {
        return Err(format!("CLI exited with code {code}"));
    }
    let want: Vec<u64> = derived_zagier_series(12); // independent expansion
    let expected = [1u64, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12];
    if want != expected {
        return Err("generating-series expansion disagrees with the frozen sequence".into());
    }
    // last column of each table row is d_s, for s = 0..=12
    let mut ds = Vec::new();
    for line in output.lines() {
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() == 5 && cols[0].parse::<u32>().is_ok() {
            ds.push(
                cols[4]
                    .parse::<u64>()
                    .map_err(|_| format!("bad d_s column in `{line}`"))?,
            );
        }
    }
    if ds != want {
        return Err(format!("CLI reported d_s = {ds:?}, expansion gives {want:?}"));
    }
    Ok("d_s for s=0..12 matches the expansion of 1/(1-x^2-x^3)".into())
}

// --- criterion 2 --------------------------------------------------------

fn c02_weight4() -> Result<String, String> {
    let m = double_shuffle_relations(4).map_err(|e| e.to_string())?;
    if m.exact_rank() != 1 {
        return Err(format!("weight-4 rank is {}, expected 1", m.exact_rank()));
    }
    let basis = admissible_compositions(4).map_err(|e| e.to_string())?;
    let i31 = basis.iter().position(|c| c.parts() == [3, 1]).unwrap();
    let i4 = basis.iter().position(|c| c.parts() == [4]).unwrap();
    let row = m.row(0);
    let ratio = &row[i31] / &row[i4];
    if ratio != Rational::from(-4) {
        return Err(format!("row encodes ratio {ratio}, expected -4 (4ζ(3,1) = ζ(4))"));
    }
    // numeric contraction of every row at 60 digits
    let bits = periodlab_core::bits_for_digits(60);
    let bound = pow10_exp_to_pow2(-50);
    for r in 0..m.rows() {
        let mut acc = Real::zero(bits + 32);
        for (coeff, comp) in m.row(r).iter().zip(&basis) {
            if coeff.is_zero() {
                continue;
            }
            let v = compute_mzv(comp, bits + 16).map_err(|e| e.to_string())?;
            acc = &acc + &(&coeff.to_real(bits + 32) * &v);
        }
        if !acc.stored_abs_le_pow2(bound) {
            return Err(format!("row {r} contraction residual exceeds 10^-50: {acc:?}"));
        }
    }
    Ok("rank 1, row encodes 4ζ(3,1) - ζ(4) = 0, contraction residual <= 10^-50".into())
}

// --- criterion 3 --------------------------------------------------------

fn c03_euler() -> Result<String, String> {
    let bits = periodlab_core::bits_for_digits(100);
    let q1 = RelationQuery {
        values: vec![
            NamedValue::new("zeta(2)", |b| compute_zeta(2, b)),
            NamedValue::new("pi^2", |b| {
                let pi = compute_pi(b + 16);
                Ok(&pi * &pi)
            }),
        ],
        precision_bits: bits,
        max_coeff_norm: 1000,
        detect_threshold_exp: None,
    };
    match pslq(&q1).map_err(|e| e.to_string())?.outcome {
        RelationOutcome::Found { coefficients, residual_exp } => {
            let want: Vec<IBig> = [6, -1].iter().map(|&x| IBig::from(x)).collect();
            if coefficients != want {
                return Err(format!("zeta(2)/pi^2 coefficients {coefficients:?}, expected (6,-1)"));
            }
            if residual_exp > pow10_exp_to_pow2(-90) {
                return Err(format!("residual 2^{residual_exp} exceeds 10^-90"));
            }
        }
        other => return Err(format!("zeta(2)/pi^2: {other:?}")),
    }
    let q2 = RelationQuery {
        values: vec![
            NamedValue::new("zeta(2,1)", |b| {
                compute_mzv(&Composition::parse("2,1").unwrap(), b)
            }),
            NamedValue::new("zeta(3)", |b| compute_zeta(3, b)),
        ],
        precision_bits: bits,
        max_coeff_norm: 1000,
        detect_threshold_exp: None,
    };
    match pslq(&q2).map_err(|e| e.to_string())?.outcome {
        RelationOutcome::Found { coefficients, .. } => {
            let want: Vec<IBig> = [1, -1].iter().map(|&x| IBig::from(x)).collect();
            if coefficients != want {
                return Err(format!("zeta(2,1)/zeta(3) coefficients {coefficients:?}, expected (1,-1)"));
            }
        }
        other => return Err(format!("zeta(2,1)/zeta(3): {other:?}")),
    }
    Ok("PSLQ returns (6,-1) on (ζ(2),π²) with residual <= 10^-90, and (1,-1) on (ζ(2,1),ζ(3))".into())
}

// --- criteria 4 & 5: shared random curves --------------------------------

struct CurveCase {
    curve: EllipticCurveQ,
    data: EllipticPeriodData,
}

fn random_curves() -> &'static Result<Vec<CurveCase>, String> {
    static CURVES: OnceLock<Result<Vec<CurveCase>, String>> = OnceLock::new();
    CURVES.get_or_init(|| {
        let bits = periodlab_core::bits_for_digits(60);
        let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
        let mut out = Vec::new();
        while out.len() < 20 {
            let g2 = Rational::new(rng.random_range(-20i64..=20), rng.random_range(1i64..=2))
                .unwrap();
            let g3 = Rational::new(rng.random_range(-20i64..=20), rng.random_range(1i64..=2))
                .unwrap();
            let Ok(curve) = EllipticCurveQ::new(g2, g3) else {
                continue; // singular draw
            };
            let data = elliptic_periods(&curve, bits + 16)
                .map_err(|e| format!("periods failed for {curve}: {e}"))?;
            out.push(CurveCase { curve, data });
        }
        Ok(out)
    })
}

fn c04_legendre() -> Result<String, String> {
    let curves = random_curves().as_ref().map_err(Clone::clone)?;
    let bits = periodlab_core::bits_for_digits(60);
    let bound = pow10_exp_to_pow2(-50);
    for case in curves {
        let res = legendre_residual(&case.data, bits);
        if !res.stored_abs_le_pow2(bound) {
            return Err(format!(
                "Legendre residual above 10^-50 for {}: {:?}",
                case.curve,
                res.to_f64_pair()
            ));
        }
    }
    Ok("|ω₁η₂ - ω₂η₁ - 2πi| <= 10^-50 on 20 random curves at 60 digits".into())
}

fn c05_eisenstein() -> Result<String, String> {
    let curves = random_curves().as_ref().map_err(Clone::clone)?;
    let bound = pow10_exp_to_pow2(-50);
    let bits = periodlab_core::bits_for_digits(60);
    for case in curves {
        let (g2, g3) =
            eisenstein_g2_g3(&case.data.omega1, &case.data.omega2, bits).map_err(|e| e.to_string())?;
        let w2 = case.curve.g2().to_real(bits + 40);
        let w3 = case.curve.g3().to_real(bits + 40);
        let d2 = &g2.re - &w2;
        let d3 = &g3.re - &w3;
        if !d2.stored_abs_le_pow2(bound)
            || !d3.stored_abs_le_pow2(bound)
            || !g2.im.stored_abs_le_pow2(bound)
            || !g3.im.stored_abs_le_pow2(bound)
        {
            return Err(format!("round trip misses 10^-50 for {}", case.curve));
        }
    }
    Ok("elliptic_periods → eisenstein_g2_g3 recovers (g2, g3) to 10^-50 on the same 20 curves".into())
}

// --- criterion 6 --------------------------------------------------------

fn c06_gauss() -> Result<String, String> {
    let digits = 50;
    let bits = periodlab_core::bits_for_digits(digits);
    let bound = pow10_exp_to_pow2(-45);
    let half: Rational = "1/2".parse().unwrap();
    let one = Rational::one();
    for ks in ["1/4", "1/2", "3/4"] {
        let k: Rational = ks.parse().unwrap();
        let k2 = &k * &k;
        let z = k2.to_real(bits + 60);
        let f = hypergeometric_pfq(&[half.clone(), half.clone()], std::slice::from_ref(&one), &z, bits + 16)
            .map_err(|e| e.to_string())?;
        let pi = compute_pi(bits + 40);
        let lhs = (&pi * &f).mul_pow2(-1);
        let comp = (&Real::one(bits + 60) - &z).try_sqrt().map_err(|e| e.to_string())?;
        let m = agm(&Real::one(bits + 60), &comp, bits + 16).map_err(|e| e.to_string())?;
        let rhs = pi.try_div(&m.mul_pow2(1)).map_err(|e| e.to_string())?;
        let d = &lhs - &rhs;
        if !d.stored_abs_le_pow2(bound) {
            return Err(format!("AGM identity misses 10^-45 at k = {ks}: {d:?}"));
        }
    }
    Ok("(π/2)·₂F₁(½,½;1;k²) = π/(2·agm(1,√(1-k²))) to 10^-45 at k ∈ {1/4, 1/2, 3/4}".into())
}

// --- criterion 7 --------------------------------------------------------

fn c07_cm() -> Result<String, String> {
    let bits = 220;
    let lem = EllipticCurveQ::new("4".parse().unwrap(), "0".parse().unwrap()).unwrap();
    let d1 = detect_cm(&lem, bits, 10_000).map_err(|e| e.to_string())?;
    let x2p1: Vec<IBig> = [1, 0, 1].iter().map(|&v| IBig::from(v)).collect();
    if !d1.is_cm || d1.tau_minpoly.as_deref() != Some(&x2p1[..]) {
        return Err(format!("(4,0): expected CM with τ-polynomial x²+1, got {d1:?}"));
    }
    let hex = EllipticCurveQ::new("0".parse().unwrap(), "4".parse().unwrap()).unwrap();
    let d2 = detect_cm(&hex, bits, 10_000).map_err(|e| e.to_string())?;
    if !d2.is_cm || d2.field_disc != Some(-3) {
        return Err(format!("(0,4): expected CM with field discriminant -3, got {d2:?}"));
    }
    let generic = EllipticCurveQ::new("4".parse().unwrap(), "4".parse().unwrap()).unwrap();
    let d3 = detect_cm(&generic, bits, 10_000).map_err(|e| e.to_string())?;
    if d3.is_cm || d3.j != "-6912/23".parse().unwrap() {
        return Err(format!("(4,4): expected non-CM with j = -110592/368, got {d3:?}"));
    }
    // descriptor consistency: trdeg 2, 2, 4
    for (curve, cm, want) in [(&lem, &d1, 2u32), (&hex, &d2, 2), (&generic, &d3, 4)] {
        let spec = PeriodSpec::EllipticPeriod { curve: curve.clone() };
        let desc = describe(&spec, Some(cm)).map_err(|e| e.to_string())?;
        if desc.predicted_trdeg != Some(want) || desc.dim_gmot != Some(want) {
            return Err(format!(
                "{}: descriptor gives trdeg {:?}, expected {want}",
                desc.class_tag, desc.predicted_trdeg
            ));
        }
        if (want == 2) != desc.status.is_theorem() {
            return Err(format!("{}: wrong theorem/conjecture status", desc.class_tag));
        }
    }
    Ok("(4,0) CM with x²+1; (0,4) CM with disc -3; (4,4) non-CM by exact j; trdeg 2/2/4".into())
}

// --- criterion 8 --------------------------------------------------------

fn c08_planted() -> Result<String, String> {
    let bits = periodlab_core::bits_for_digits(80);
    let mut rng = StdRng::seed_from_u64(0x9a17_ed00);
    let mut recovered = 0usize;
    for trial in 0..50 {
        let n = rng.random_range(5usize..=8);
        let mut coeffs: Vec<i64> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut c = 0;
            while c == 0 {
                c = rng.random_range(-100i64..=100);
            }
            coeffs.push(c);
        }
        // innocent irrationals x_2..x_n: rational multiples of square roots
        // of distinct primes, which admit no rational linear relation
        const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];
        let mut pool: Vec<i64> = PRIMES.to_vec();
        let tails: Vec<Rational> = (1..n)
            .map(|_| {
                let p = pool.swap_remove(rng.random_range(0..pool.len()));
                let scale = Rational::new(rng.random_range(1i64..=9), rng.random_range(1i64..=5))
                    .unwrap();
                &(&scale * &scale) * &Rational::from(p)
            })
            .collect();
        let mut values: Vec<NamedValue> = Vec::with_capacity(n);
        // x_1 = -(sum a_i x_i)/a_1 makes the planted vector a relation
        let a1 = coeffs[0];
        let plant_coeffs: Vec<i64> = coeffs[1..].to_vec();
        let plant_tails = tails.clone();
        values.push(NamedValue::new("x1", move |b| {
            let mut acc = Real::zero(b + 32);
            for (a, r) in plant_coeffs.iter().zip(&plant_tails) {
                let x = r.to_real(b + 32).try_sqrt()?;
                acc = &acc + &(&Real::from_integer(*a, b + 32) * &x);
            }
            (-acc).try_div(&Real::from_integer(a1, b + 32))
        }));
        for (i, r) in tails.iter().enumerate() {
            let r = r.clone();
            values.push(NamedValue::new(format!("x{}", i + 2), move |b| {
                r.to_real(b + 16).try_sqrt()
            }));
        }
        let query = RelationQuery {
            values,
            precision_bits: bits,
            max_coeff_norm: 100_000,
            detect_threshold_exp: None,
        };
        match pslq(&query).map_err(|e| format!("trial {trial}: {e}"))?.outcome {
            RelationOutcome::Found { coefficients, .. } => {
                let planted =
                    normalize_primitive(coeffs.iter().map(|&c| IBig::from(c)).collect());
                if coefficients == planted {
                    recovered += 1;
                } else {
                    return Err(format!(
                        "trial {trial}: recovered {coefficients:?}, planted {planted:?}"
                    ));
                }
            }
            other => return Err(format!("trial {trial}: no relation found: {other:?}")),
        }
    }
    if recovered != 50 {
        return Err(format!("only {recovered}/50 planted relations recovered"));
    }
    Ok("50/50 planted relations recovered at 80 digits; every report re-verified".into())
}

// --- criterion 9 --------------------------------------------------------

fn c09_exclusion() -> Result<String, String> {
    let bits = periodlab_core::bits_for_digits(100);
    // census over {pi} to degree 4, norm 10^4: no relations
    let census = monomial_census(
        &[NamedValue::new("pi", |b| Ok(compute_pi(b)))],
        &CensusParams { degree_bound: 4, precision_bits: bits, max_coeff_norm: 10_000 },
    )
    .map_err(|e| e.to_string())?;
    if !census.relations_found.is_empty() {
        return Err(format!(
            "census over pi found {} relation(s); transcendence of π forbids them",
            census.relations_found.len()
        ));
    }
    if census.exclusion_norm < 10_000 {
        return Err(format!(
            "pi census certified only norm {} < 10^4",
            census.exclusion_norm
        ));
    }
    // census over {zeta(2), pi} degree 2: exactly Euler, flagged motivic
    let probe = consistency_probe(&PeriodSpec::ZetaInt { s: 2 }, None, 2, bits, 10_000)
        .map_err(|e| e.to_string())?;
    if probe.findings.len() != 1 {
        return Err(format!("expected exactly one relation, got {}", probe.findings.len()));
    }
    let f = &probe.findings[0];
    if f.class != RelationClass::EulerEven || !f.class.is_motivic_catalogued() {
        return Err(format!("Euler relation misclassified: {f:?}"));
    }
    Ok("π census: no relations up to norm 10^4; {ζ(2),π} census: exactly the Euler relation, motivic-origin".into())
}

// --- criterion 10 -------------------------------------------------------

fn c10_series() -> Result<String, String> {
    let sinc = sinc_taylor(5);
    let want: Vec<Rational> = ["1", "0", "-1/6", "0", "1/120"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    if sinc != want {
        return Err(format!("sinc coefficients {sinc:?}"));
    }
    for (g2s, g3s) in [("4", "0"), ("5", "7/3"), ("-2", "9")] {
        let g2: Rational = g2s.parse().unwrap();
        let g3: Rational = g3s.parse().unwrap();
        let c = sigma_taylor(&g2, &g3, 8);
        if c[4] != -g2.clone() / Rational::from(240) {
            return Err(format!("sigma x^4 coefficient wrong at ({g2s},{g3s})"));
        }
        if c[6] != -g3.clone() / Rational::from(840) {
            return Err(format!("sigma x^6 coefficient wrong at ({g2s},{g3s})"));
        }
    }
    Ok("sinc = [1, 0, -1/6, 0, 1/120]; sigma has x⁴ = -g2/240 and x⁶ = -g3/840, exactly".into())
}

// --- criterion 11 -------------------------------------------------------

fn c11_algebra() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x00a1_9eba);
    // 200 random triples: commutativity and associativity, exact
    for _ in 0..200 {
        let (a, b, c) = (
            random_composition(&mut rng, 6),
            random_composition(&mut rng, 6),
            random_composition(&mut rng, 6),
        );
        if stuffle(&a, &b) != stuffle(&b, &a) {
            return Err(format!("stuffle not commutative on {a} {b}"));
        }
        let ab_c = formal_stuffle(&stuffle(&a, &b), &c);
        let a_bc = formal_stuffle_r(&a, &stuffle(&b, &c));
        if ab_c != a_bc {
            return Err(format!("stuffle not associative on {a} {b} {c}"));
        }
        let (u, v, w) = (
            periodlab_core::mzv::word_of_composition(&a),
            periodlab_core::mzv::word_of_composition(&b),
            periodlab_core::mzv::word_of_composition(&c),
        );
        let sh = periodlab_core::mzv::shuffle(&u, &v);
        if sh != periodlab_core::mzv::shuffle(&v, &u) {
            return Err(format!("shuffle not commutative on {u} {v}"));
        }
        let l = formal_shuffle(&sh, &w);
        let r = formal_shuffle_r(&u, &periodlab_core::mzv::shuffle(&v, &w));
        if l != r {
            return Err(format!("shuffle not associative on {u} {v} {w}"));
        }
    }
    // numeric product compatibility at 40 digits for combined weight <= 7
    let bits = periodlab_core::bits_for_digits(40);
    let budget = -(bits as i64) + 16;
    for wu in 2..=5u32 {
        for wv in 2..=(7 - wu) {
            let us = admissible_compositions(wu).map_err(|e| e.to_string())?;
            let vs = admissible_compositions(wv).map_err(|e| e.to_string())?;
            for u in &us {
                for v in &vs {
                    let prod = &compute_mzv(u, bits + 24).map_err(|e| e.to_string())?
                        * &compute_mzv(v, bits + 24).map_err(|e| e.to_string())?;
                    for (label, sum) in [
                        ("stuffle", stuffle(u, v)),
                        ("shuffle", shuffle_compositions(u, v).map_err(|e| e.to_string())?),
                    ] {
                        let mut acc = Real::zero(bits + 32);
                        for (comp, coeff) in sum.iter() {
                            let x = compute_mzv(comp, bits + 24).map_err(|e| e.to_string())?;
                            acc = &acc + &(&coeff.to_real(bits + 32) * &x);
                        }
                        let d = &acc - &prod;
                        if !d.stored_abs_le_pow2(budget) {
                            return Err(format!(
                                "{label}({u},{v}) disagrees with the product numerically: {d:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok("200 exact commutativity/associativity instances; numeric product compatibility at 40 digits for combined weight <= 7".into())
}

fn random_composition(rng: &mut StdRng, max_weight: u32) -> Composition {
    let weight = rng.random_range(2..=max_weight);
    let choices = admissible_compositions(weight).unwrap();
    choices[rng.random_range(0..choices.len())].clone()
}

fn formal_stuffle(
    s: &periodlab_core::mzv::FormalSum<Composition>,
    c: &Composition,
) -> periodlab_core::mzv::FormalSum<Composition> {
    let mut out = periodlab_core::mzv::FormalSum::zero();
    for (k, v) in s.iter() {
        for (k2, v2) in stuffle(k, c).iter() {
            out.add_term(k2.clone(), v * v2);
        }
    }
    out
}

fn formal_stuffle_r(
    c: &Composition,
    s: &periodlab_core::mzv::FormalSum<Composition>,
) -> periodlab_core::mzv::FormalSum<Composition> {
    let mut out = periodlab_core::mzv::FormalSum::zero();
    for (k, v) in s.iter() {
        for (k2, v2) in stuffle(c, k).iter() {
            out.add_term(k2.clone(), v * v2);
        }
    }
    out
}

fn formal_shuffle(
    s: &periodlab_core::mzv::FormalSum<periodlab_core::mzv::BinaryWord>,
    w: &periodlab_core::mzv::BinaryWord,
) -> periodlab_core::mzv::FormalSum<periodlab_core::mzv::BinaryWord> {
    let mut out = periodlab_core::mzv::FormalSum::zero();
    for (k, v) in s.iter() {
        for (k2, v2) in periodlab_core::mzv::shuffle(k, w).iter() {
            out.add_term(k2.clone(), v * v2);
        }
    }
    out
}

fn formal_shuffle_r(
    w: &periodlab_core::mzv::BinaryWord,
    s: &periodlab_core::mzv::FormalSum<periodlab_core::mzv::BinaryWord>,
) -> periodlab_core::mzv::FormalSum<periodlab_core::mzv::BinaryWord> {
    let mut out = periodlab_core::mzv::FormalSum::zero();
    for (k, v) in s.iter() {
        for (k2, v2) in periodlab_core::mzv::shuffle(w, k).iter() {
            out.add_term(k2.clone(), v * v2);
        }
    }
    out
}

// --- criterion 12 -------------------------------------------------------

const LEDGER_GOLDEN: &str = include_str!("../tests/golden/ledger.json");

/// Serialize the catalogued ledger entries for the five headline classes.
pub fn ledger_snapshot() -> Result<String, String> {
    let lem = EllipticCurveQ::new("4".parse().unwrap(), "0".parse().unwrap()).unwrap();
    let generic = EllipticCurveQ::new("4".parse().unwrap(), "4".parse().unwrap()).unwrap();
    let cm_lem = detect_cm(&lem, 220, 10_000).map_err(|e| e.to_string())?;
    let cm_gen = detect_cm(&generic, 220, 10_000).map_err(|e| e.to_string())?;
    let entries = vec![
        describe(&PeriodSpec::Pi, None).map_err(|e| e.to_string())?,
        describe(&PeriodSpec::LogRational { q: "2".parse().unwrap() }, None)
            .map_err(|e| e.to_string())?,
        describe(&PeriodSpec::ZetaInt { s: 3 }, None).map_err(|e| e.to_string())?,
        describe(&PeriodSpec::EllipticPeriod { curve: lem }, Some(&cm_lem))
            .map_err(|e| e.to_string())?,
        describe(&PeriodSpec::EllipticPeriod { curve: generic }, Some(&cm_gen))
            .map_err(|e| e.to_string())?,
    ];
    serde_json::to_string_pretty(&entries).map_err(|e| e.to_string())
}

fn c12_ledger() -> Result<String, String> {
    let snapshot = ledger_snapshot()?;
    if snapshot.trim() != LEDGER_GOLDEN.trim() {
        return Err("serialized ledger differs from the golden file".into());
    }
    // spot-check the catalogued strings survive in the golden data
    for needle in [
        "\"Q^×\"",
        "\"Q^× ⋉ Q\"",
        "\"GL₂(Q)\"",
        "\"N_K (normalizer of a Cartan)\"",
        "\"predicted_trdeg\": 1",
        "\"predicted_trdeg\": 2",
        "\"predicted_trdeg\": 4",
    ] {
        if !LEDGER_GOLDEN.contains(needle) {
            return Err(format!("golden ledger is missing {needle}"));
        }
    }
    Ok("ledger entries for π, log 2, ζ(3), CM and non-CM elliptic match the golden file".into())
}
