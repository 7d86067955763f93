//! The ledger proper: catalogued Galois data per period class.
//!
//! Group names, orbit rules, dimensions and statuses are stored exactly as
//! catalogued; nothing is fabricated. Classes whose groups are described
//! only qualitatively (Γ at rationals, higher-depth MZVs) carry prose
//! notes and no invented dimensions, so their numeric fields are absent.

use serde::Serialize;

use crate::error::{Error, Result};

use super::cm::CmDecision;
use super::spec::PeriodSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LedgerStatus {
    Theorem { attribution: String },
    Conjectural { attribution: String },
}

impl LedgerStatus {
    fn theorem(a: &str) -> Self {
        LedgerStatus::Theorem { attribution: a.into() }
    }

    fn conjectural(a: &str) -> Self {
        LedgerStatus::Conjectural { attribution: a.into() }
    }

    pub fn is_theorem(&self) -> bool {
        matches!(self, LedgerStatus::Theorem { .. })
    }
}

/// A ledger entry: the conjectural (or proven) Galois data of one period
/// class. `predicted_trdeg` always equals `dim_Gmot` where both are
/// present (the quantitative form of the period conjecture for
/// connected-torsor classes); both are absent where the catalogue is
/// prose-only.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisDescriptor {
    pub class_tag: String,
    pub group_name: String,
    #[serde(rename = "dim_Gmot")]
    pub dim_gmot: Option<u32>,
    pub orbit_rule: String,
    pub predicted_trdeg: Option<u32>,
    pub status: LedgerStatus,
    pub notes: String,
    pub references: Vec<String>,
}

/// The catalogued descriptor of a period class. Elliptic classes require
/// a resolved CM decision first.
pub fn describe(spec: &PeriodSpec, cm: Option<&CmDecision>) -> Result<GaloisDescriptor> {
    spec.validate()?;
    let class_tag = spec.class_tag();
    Ok(match spec {
        PeriodSpec::Pi => GaloisDescriptor {
            class_tag,
            group_name: "Q^×".into(),
            dim_gmot: Some(1),
            orbit_rule: "Q^×·π".into(),
            predicted_trdeg: Some(1),
            status: LedgerStatus::theorem("transcendence of π (Lindemann)"),
            notes: "the period 2πi of the Lefschetz motive; the multiplicative group acts by \
                    scaling and the Galois closure is Q[π]"
                .into(),
            references: vec!["Lefschetz motive Q(-1)".into()],
        },
        PeriodSpec::LogRational { q } => GaloisDescriptor {
            class_tag,
            group_name: "Q^× ⋉ Q".into(),
            dim_gmot: Some(2),
            orbit_rule: format!("{{log {q} + r·πi : r ∈ Q}}"),
            predicted_trdeg: Some(2),
            status: LedgerStatus::conjectural(
                "algebraic independence of log q and π is open",
            ),
            notes: "period of a Kummer 1-motive; the semidirect product acts through scaling \
                    and πi-translation of the logarithm"
                .into(),
            references: vec!["Kummer 1-motive".into()],
        },
        PeriodSpec::ZetaInt { s } if s % 2 == 1 => GaloisDescriptor {
            class_tag,
            group_name: "Q^× ⋉ Q".into(),
            dim_gmot: Some(2),
            orbit_rule: format!("{{ζ({s}) + r·(πi)^{s} : r ∈ Q}}"),
            predicted_trdeg: Some(2),
            status: LedgerStatus::conjectural(
                "independence of π and odd zeta values is open",
            ),
            notes: format!(
                "period of a mixed Tate motive over Z (extension of the unit motive by Q({s}))"
            ),
            references: vec!["mixed Tate motives over Z".into()],
        },
        PeriodSpec::ZetaInt { s } => GaloisDescriptor {
            class_tag,
            group_name: "Q^×".into(),
            dim_gmot: Some(1),
            orbit_rule: format!("Q^×·ζ({s})"),
            predicted_trdeg: Some(1),
            status: LedgerStatus::theorem(
                "Euler's evaluation ζ(even) ∈ Q·π^even plus the transcendence of π",
            ),
            notes: format!("ζ({s}) is a rational multiple of π^{s}; the class reduces to π"),
            references: vec!["Euler".into(), "Lefschetz motive Q(-1)".into()],
        },
        PeriodSpec::Mzv { composition } => {
            if composition.depth() == 1 {
                let s = composition.parts()[0] as i64;
                let mut d = describe(&PeriodSpec::ZetaInt { s }, None)?;
                d.class_tag = class_tag;
                return Ok(d);
            }
            GaloisDescriptor {
                class_tag,
                group_name: "extension of Q^× by a prounipotent group".into(),
                dim_gmot: None,
                orbit_rule:
                    "not catalogued as data: the controlling group is described qualitatively"
                        .into(),
                predicted_trdeg: None,
                status: LedgerStatus::conjectural(
                    "Goncharov–Terasoma bound dim_Q Z_s ≤ d_s; Zagier/Hoffman conjectures open",
                ),
                notes: "periods of mixed Tate motives over Z; the graded Lie algebra is \
                        conjecturally free with one generator in each odd degree s > 1"
                    .into(),
                references: vec![
                    "mixed Tate motives over Z".into(),
                    "Goncharov; Terasoma (dimension bound)".into(),
                ],
            }
        }
        PeriodSpec::GammaRational { x } => GaloisDescriptor {
            class_tag,
            group_name: "connected part a torus (character groups known, not encoded here)"
                .into(),
            dim_gmot: None,
            orbit_rule: format!(
                "describable in principle from the torus character data of Γ({x}); not encoded"
            ),
            predicted_trdeg: None,
            status: LedgerStatus::conjectural("Lang–Rohrlich conjecture"),
            notes: format!(
                "Γ({x})^q (q the denominator) is a period of an abelian variety with complex \
                 multiplication by a cyclotomic field; all polynomial relations should come \
                 from the functional equations of Γ"
            ),
            references: vec![
                "Shimura; Gross; Deligne; Anderson (CM abelian varieties)".into(),
                "Lang–Rohrlich conjecture".into(),
            ],
        },
        PeriodSpec::AlgebraicNumber { minpoly } => GaloisDescriptor {
            class_tag,
            group_name: "Gal(F/Q)".into(),
            dim_gmot: Some(0),
            orbit_rule: format!(
                "roots of the minimal polynomial (degree {})",
                crate::poly::poly_degree(minpoly)
            ),
            predicted_trdeg: Some(0),
            status: LedgerStatus::theorem("classical Galois theory"),
            notes: "the motive of the splitting field; conjugates and group are the classical \
                    ones, transcendence degree zero"
                .into(),
            references: vec!["Artin motive of Spec F".into()],
        },
        PeriodSpec::EllipticPeriod { curve } => {
            let Some(cm) = cm else {
                return Err(Error::UnresolvedCM);
            };
            if cm.is_cm {
                let field = cm
                    .field_disc
                    .map(|d| {
                        let radicand = if d % 4 == 0 { d / 4 } else { d };
                        format!("Q(√({radicand}))")
                    })
                    .unwrap_or_else(|| "an imaginary quadratic field".into());
                GaloisDescriptor {
                    class_tag,
                    group_name: "N_K (normalizer of a Cartan)".into(),
                    dim_gmot: Some(2),
                    orbit_rule: "L_Q ∖ 0".into(),
                    predicted_trdeg: Some(2),
                    status: LedgerStatus::theorem("Chudnovsky"),
                    notes: format!(
                        "curve {curve} has complex multiplication by an order in K = {field} \
                         (j = {}); the algebraicity of ω₂/ω₁ is the only relation",
                        cm.j
                    ),
                    references: vec!["Chudnovsky (CM transcendence degree 2)".into()],
                }
            } else {
                GaloisDescriptor {
                    class_tag,
                    group_name: "GL₂(Q)".into(),
                    dim_gmot: Some(4),
                    orbit_rule: "L_Q ∖ 0".into(),
                    predicted_trdeg: Some(4),
                    status: LedgerStatus::conjectural(
                        "algebraic independence of the four elliptic periods is open; only \
                         transcendence degree ≥ 2 is known",
                    ),
                    notes: format!(
                        "curve {curve} with End = Z (j = {}); the period set is \
                         {{ω₁, ω₂, η₁, η₂}} with 2πi dependent via the Legendre relation",
                        cm.j
                    ),
                    references: vec!["Schneider (transcendence of elliptic periods)".into()],
                }
            }
        }
    })
}

/// Predicted transcendence degree with theorem/conjecture flag; errors on
/// classes whose dimension is not catalogued as data.
pub fn predicted_trdeg(spec: &PeriodSpec, cm: Option<&CmDecision>) -> Result<(u32, LedgerStatus)> {
    let d = describe(spec, cm)?;
    match d.predicted_trdeg {
        Some(t) => Ok((t, d.status)),
        None => Err(Error::NotCatalogued(format!(
            "no numeric transcendence degree is catalogued for {}",
            d.class_tag
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::detect_cm;
    use crate::periods::EllipticCurveQ;

    #[test]
    fn pi_entry() {
        let d = describe(&PeriodSpec::Pi, None).unwrap();
        assert_eq!(d.group_name, "Q^×");
        assert_eq!(d.dim_gmot, Some(1));
        assert_eq!(d.predicted_trdeg, Some(1));
        assert!(d.status.is_theorem());
    }

    #[test]
    fn zeta_parity_split() {
        let odd = describe(&PeriodSpec::ZetaInt { s: 3 }, None).unwrap();
        assert_eq!(odd.group_name, "Q^× ⋉ Q");
        assert_eq!(odd.predicted_trdeg, Some(2));
        assert!(!odd.status.is_theorem());
        assert!(odd.orbit_rule.contains("(πi)^3"));
        let even = describe(&PeriodSpec::ZetaInt { s: 2 }, None).unwrap();
        assert_eq!(even.group_name, "Q^×");
        assert_eq!(even.predicted_trdeg, Some(1));
        assert!(even.status.is_theorem());
    }

    #[test]
    fn elliptic_requires_cm_resolution() {
        let curve = EllipticCurveQ::new("4".parse().unwrap(), "0".parse().unwrap()).unwrap();
        let spec = PeriodSpec::EllipticPeriod { curve: curve.clone() };
        assert!(matches!(describe(&spec, None), Err(Error::UnresolvedCM)));
        let cm = detect_cm(&curve, 160, 1000).unwrap();
        let d = describe(&spec, Some(&cm)).unwrap();
        assert_eq!(d.group_name, "N_K (normalizer of a Cartan)");
        assert_eq!(d.predicted_trdeg, Some(2));
        assert!(d.status.is_theorem());
    }

    #[test]
    fn non_cm_elliptic_is_conjectural_dimension_four() {
        let curve = EllipticCurveQ::new("4".parse().unwrap(), "4".parse().unwrap()).unwrap();
        let spec = PeriodSpec::EllipticPeriod { curve: curve.clone() };
        let cm = detect_cm(&curve, 128, 100).unwrap();
        let d = describe(&spec, Some(&cm)).unwrap();
        assert_eq!(d.group_name, "GL₂(Q)");
        assert_eq!(d.dim_gmot, Some(4));
        assert_eq!(d.predicted_trdeg, Some(4));
        assert!(!d.status.is_theorem());
    }

    #[test]
    fn prose_only_classes_have_no_dimensions() {
        let mzv = describe(
            &PeriodSpec::Mzv { composition: crate::mzv::Composition::parse("3,1").unwrap() },
            None,
        )
        .unwrap();
        assert!(mzv.dim_gmot.is_none());
        assert!(mzv.predicted_trdeg.is_none());
        assert!(matches!(
            predicted_trdeg(
                &PeriodSpec::GammaRational { x: "1/4".parse().unwrap() },
                None
            ),
            Err(Error::NotCatalogued(_))
        ));
    }

    #[test]
    fn fixed_point_invariant_trdeg_equals_dim() {
        // wherever both numbers exist, they agree (the ledger's stored
        // form of the quantitative conjecture)
        let curve = EllipticCurveQ::new("0".parse().unwrap(), "4".parse().unwrap()).unwrap();
        let cm = detect_cm(&curve, 160, 1000).unwrap();
        let specs: Vec<(PeriodSpec, Option<&CmDecision>)> = vec![
            (PeriodSpec::Pi, None),
            (PeriodSpec::LogRational { q: "2".parse().unwrap() }, None),
            (PeriodSpec::ZetaInt { s: 3 }, None),
            (PeriodSpec::ZetaInt { s: 4 }, None),
            (PeriodSpec::EllipticPeriod { curve: curve.clone() }, Some(&cm)),
            (
                PeriodSpec::AlgebraicNumber {
                    minpoly: vec!["-2".parse().unwrap(), "0".parse().unwrap(), "1".parse().unwrap()],
                },
                None,
            ),
        ];
        for (spec, cm) in specs {
            let d = describe(&spec, cm).unwrap();
            assert_eq!(d.dim_gmot, d.predicted_trdeg, "class {}", d.class_tag);
        }
    }

    #[test]
    fn serialized_schema_fields() {
        let d = describe(&PeriodSpec::Pi, None).unwrap();
        let json = serde_json::to_value(&d).unwrap();
        for key in [
            "class_tag",
            "group_name",
            "dim_Gmot",
            "orbit_rule",
            "predicted_trdeg",
            "status",
            "references",
        ] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(json["status"]["kind"], "theorem");
    }
}
