//! Empirical consistency probe: assemble the period set of a class, run
//! the monomial census over it, and compare every relation found against
//! the catalogue of motivic-origin relations (Legendre, CM, Euler). A
//! relation outside the catalogue would numerically contradict the
//! conjecture for that class and is flagged loudly.

use dashu_int::IBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::periods::elliptic_periods;
use crate::relations::{CensusParams, CensusReport, NamedValue, monomial_census, normalize_primitive};

use super::cm::CmDecision;
use super::spec::PeriodSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationClass {
    /// The Legendre relation ω₁η̂ - ω̂η₁ = 4π in the real probe basis.
    Legendre,
    /// CM: relation among lattice periods only (τ-algebraicity).
    CmPeriod,
    /// CM: relation among quasi-periods only.
    CmQuasiPeriod,
    /// CM: mixed relation, catalogued wholesale by Chudnovsky's theorem.
    CmMixed,
    /// ζ(even) as a rational multiple of a π power (Euler).
    EulerEven,
    /// Γ(1/2)² = π.
    GammaHalf,
    /// Weight-consistent MZV–π-power relation.
    MzvPiPower,
    /// Not in the catalogue: numerically contradicts the conjecture.
    Unexpected,
}

impl RelationClass {
    pub fn is_motivic_catalogued(&self) -> bool {
        !matches!(self, RelationClass::Unexpected)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeFinding {
    pub coefficients: Vec<String>,
    #[serde(skip)]
    pub raw: Vec<IBig>,
    pub class: RelationClass,
    pub description: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub class_tag: String,
    pub period_set: Vec<String>,
    pub census: CensusReport,
    pub findings: Vec<ProbeFinding>,
    pub unexpected_count: usize,
}

struct ProbeContext {
    kind: ProbeKind,
    is_cm: bool,
    /// (generator index groups, weights) used by the classifiers
    legendre: Option<Vec<IBig>>,
    weights: Option<Vec<u32>>,
}

enum ProbeKind {
    Pi,
    Log,
    ZetaOdd,
    ZetaEven,
    Mzv,
    GammaHalfPoint,
    GammaGeneric,
    Elliptic,
}

/// Run the probe for a period class.
pub fn consistency_probe(
    spec: &PeriodSpec,
    cm: Option<&CmDecision>,
    degree_bound: usize,
    precision_bits: usize,
    max_coeff_norm: u64,
) -> Result<ProbeReport> {
    spec.validate()?;
    let (gens, ctx) = period_set(spec, cm, degree_bound)?;
    let params = CensusParams {
        degree_bound,
        precision_bits,
        max_coeff_norm,
    };
    let census = monomial_census(&gens, &params)?;
    let mut findings = Vec::new();
    let mut unexpected = 0usize;
    for rel in &census.relations_found {
        let class = classify(&rel.raw, &census.monomial_exponents, &ctx);
        if class == RelationClass::Unexpected {
            unexpected += 1;
        }
        let description = describe_finding(&class, &ctx);
        findings.push(ProbeFinding {
            coefficients: rel.coefficients.clone(),
            raw: rel.raw.clone(),
            class,
            description,
        });
    }
    Ok(ProbeReport {
        class_tag: spec.class_tag(),
        period_set: gens.iter().map(|g| g.name().to_string()).collect(),
        census,
        findings,
        unexpected_count: unexpected,
    })
}

fn pi_source() -> NamedValue {
    NamedValue::new("pi", |bits| Ok(crate::periods::compute_pi(bits)))
}

fn period_set(
    spec: &PeriodSpec,
    cm: Option<&CmDecision>,
    degree_bound: usize,
) -> Result<(Vec<NamedValue>, ProbeContext)> {
    let no_extra = ProbeContext {
        kind: ProbeKind::Pi,
        is_cm: false,
        legendre: None,
        weights: None,
    };
    Ok(match spec {
        PeriodSpec::Pi => (vec![pi_source()], no_extra),
        PeriodSpec::LogRational { q } => {
            let q = q.clone();
            let log_src = NamedValue::new(format!("log({q})"), move |bits| {
                crate::periods::compute_log_rational(&q, bits)
            });
            (
                vec![log_src, pi_source()],
                ProbeContext { kind: ProbeKind::Log, is_cm: false, legendre: None, weights: None },
            )
        }
        PeriodSpec::ZetaInt { s } => {
            let s = *s;
            let z = NamedValue::new(format!("zeta({s})"), move |bits| {
                crate::periods::compute_zeta(s, bits)
            });
            let kind = if s % 2 == 0 { ProbeKind::ZetaEven } else { ProbeKind::ZetaOdd };
            (
                vec![z, pi_source()],
                ProbeContext {
                    kind,
                    is_cm: false,
                    legendre: None,
                    weights: Some(vec![s as u32, 1]),
                },
            )
        }
        PeriodSpec::Mzv { composition } => {
            let c = composition.clone();
            let w = c.weight();
            let name = spec.class_tag();
            let z = NamedValue::new(name, move |bits| crate::periods::compute_mzv(&c, bits));
            (
                vec![z, pi_source()],
                ProbeContext {
                    kind: ProbeKind::Mzv,
                    is_cm: false,
                    legendre: None,
                    weights: Some(vec![w, 1]),
                },
            )
        }
        PeriodSpec::GammaRational { x } => {
            let xc = x.clone();
            let g = NamedValue::new(format!("gamma({x})"), move |bits| {
                crate::periods::compute_gamma_rational(&xc, bits)
            });
            let kind = if *x == "1/2".parse().unwrap() {
                ProbeKind::GammaHalfPoint
            } else {
                ProbeKind::GammaGeneric
            };
            (
                vec![g, pi_source()],
                ProbeContext { kind, is_cm: false, legendre: None, weights: None },
            )
        }
        PeriodSpec::AlgebraicNumber { .. } => {
            return Err(Error::NotCatalogued(
                "the probe targets transcendental classes; algebraic numbers have trdeg 0".into(),
            ));
        }
        PeriodSpec::EllipticPeriod { curve } => {
            let Some(cm) = cm else {
                return Err(Error::UnresolvedCM);
            };
            // real generator basis: ω₁, ω̂ = (2ω₂ - mω₁)/i, η₁,
            // η̂ = (2η₂ - mη₁)/i, π, with m = round(2 Re τ); curves over Q
            // have conjugation-stable lattices so both hatted values are real
            let mk = |which: u8, name: &str| {
                let c = curve.clone();
                NamedValue::new(name, move |bits| {
                    let data = elliptic_periods(&c, bits + 16)?;
                    let m = crate::real::float_round_to_ibig(data.tau.re.mul_pow2(1).value());
                    let mr = crate::real::Real::from_integer(m, bits + 16);
                    let anti = |z2: &crate::complex::Complex, z1: &crate::complex::Complex| {
                        let num = &z2.mul_pow2(1) - &z1.scale(&mr);
                        // num is purely imaginary; dividing by i leaves Im
                        num.im.clone()
                    };
                    Ok(match which {
                        0 => data.omega1.re.clone(),
                        1 => anti(&data.omega2, &data.omega1),
                        2 => data.eta1.re.clone(),
                        _ => anti(&data.eta2, &data.eta1),
                    })
                })
            };
            let gens = vec![
                mk(0, "omega1"),
                mk(1, "omega2_anti"),
                mk(2, "eta1"),
                mk(3, "eta2_anti"),
                pi_source(),
            ];
            // expected Legendre vector over the degree-2 monomials
            let legendre = if degree_bound >= 2 {
                let exps = crate::relations::monomial_exponents(5, degree_bound);
                let mut v = vec![IBig::ZERO; exps.len()];
                let find = |pat: &[u32]| exps.iter().position(|e| e == pat).unwrap();
                v[find(&[1, 0, 0, 1, 0])] = IBig::ONE;
                v[find(&[0, 1, 1, 0, 0])] = IBig::from(-1);
                v[find(&[0, 0, 0, 0, 1])] = IBig::from(-4);
                Some(v)
            } else {
                None
            };
            (
                gens,
                ProbeContext {
                    kind: ProbeKind::Elliptic,
                    is_cm: cm.is_cm,
                    legendre,
                    weights: None,
                },
            )
        }
    })
}

fn classify(rel: &[IBig], exps: &[Vec<u32>], ctx: &ProbeContext) -> RelationClass {
    let support: Vec<usize> = rel
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != IBig::ZERO)
        .map(|(i, _)| i)
        .collect();
    match ctx.kind {
        ProbeKind::Elliptic => {
            if let Some(expected) = &ctx.legendre {
                let a = normalize_primitive(rel.to_vec());
                let b = normalize_primitive(expected.clone());
                if a == b {
                    return RelationClass::Legendre;
                }
            }
            // generator groups: 0,1 = periods; 2,3 = quasi-periods; 4 = π
            let uses = |idx: &usize, gens: &[usize]| -> bool {
                exps[*idx]
                    .iter()
                    .enumerate()
                    .all(|(g, &e)| e == 0 || gens.contains(&g))
            };
            let all_periods = support.iter().all(|i| uses(i, &[0, 1]));
            let all_quasi = support.iter().all(|i| uses(i, &[2, 3]));
            if all_periods && ctx.is_cm {
                return RelationClass::CmPeriod;
            }
            if all_quasi && ctx.is_cm {
                return RelationClass::CmQuasiPeriod;
            }
            if ctx.is_cm {
                return RelationClass::CmMixed;
            }
            RelationClass::Unexpected
        }
        ProbeKind::ZetaEven => RelationClass::EulerEven,
        ProbeKind::GammaHalfPoint => {
            // Γ(1/2)² = π generates the true relations here; anything it
            // generates is homogeneous under Γ ↦ weight 1, π ↦ weight 2
            let weight_of = |i: &usize| -> u64 {
                exps[*i][0] as u64 + 2 * exps[*i][1] as u64
            };
            let mut it = support.iter();
            if let Some(first) = it.next() {
                let w0 = weight_of(first);
                if w0 > 0 && it.all(|i| weight_of(i) == w0) {
                    return RelationClass::GammaHalf;
                }
            }
            RelationClass::Unexpected
        }
        ProbeKind::Mzv => {
            // weight consistency: every support monomial must have equal
            // total weight under (weight(mzv), 1)
            let w = ctx.weights.as_ref().unwrap();
            let weight_of = |i: &usize| -> u64 {
                exps[*i]
                    .iter()
                    .zip(w)
                    .map(|(&e, &wt)| e as u64 * wt as u64)
                    .sum()
            };
            let mut it = support.iter();
            if let Some(first) = it.next() {
                let w0 = weight_of(first);
                if w0 > 0 && it.all(|i| weight_of(i) == w0) {
                    return RelationClass::MzvPiPower;
                }
            }
            RelationClass::Unexpected
        }
        _ => RelationClass::Unexpected,
    }
}

fn describe_finding(class: &RelationClass, ctx: &ProbeContext) -> String {
    match class {
        RelationClass::Legendre => {
            "Legendre relation ω₁η̂ - ω̂η₁ = 4π (motivic origin)".into()
        }
        RelationClass::CmPeriod => "CM τ-algebraicity relation among lattice periods \
                                    (motivic origin; Chudnovsky's theorem)"
            .into(),
        RelationClass::CmQuasiPeriod => {
            "CM relation among quasi-periods (motivic origin; Chudnovsky's theorem)".into()
        }
        RelationClass::CmMixed => {
            "relation within the CM period algebra of transcendence degree 2 \
             (motivic origin; Chudnovsky's theorem)"
                .into()
        }
        RelationClass::EulerEven => {
            "Euler evaluation: ζ(even) is a rational multiple of the matching π power \
             (motivic origin)"
                .into()
        }
        RelationClass::GammaHalf => "Γ(1/2)² = π (motivic origin)".into(),
        RelationClass::MzvPiPower => {
            "weight-consistent MZV–π-power relation (catalogued family)".into()
        }
        RelationClass::Unexpected => {
            let cm = if ctx.is_cm { " (CM)" } else { "" };
            format!(
                "UNEXPECTED relation{cm}: not in the motivic catalogue; this would \
                 numerically contradict the predicted transcendence degree"
            )
        }
    }
}
