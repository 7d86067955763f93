//! Tagged descriptions of period classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mzv::Composition;
use crate::periods::EllipticCurveQ;
use crate::poly::{poly_degree, poly_normalize};
use crate::rational::Rational;

/// A period class together with its defining parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum PeriodSpec {
    /// Root field of a rational polynomial (ascending coefficients).
    AlgebraicNumber { minpoly: Vec<Rational> },
    Pi,
    /// log q for rational q outside {-1, 0, 1}; this artifact evaluates
    /// positive q only.
    LogRational { q: Rational },
    /// ζ(s) for integer s >= 2.
    ZetaInt { s: i64 },
    /// A multiple zeta value with admissible composition.
    Mzv { composition: Composition },
    /// Γ(x) at positive rational x.
    GammaRational { x: Rational },
    /// Period lattice data of a nonsingular Weierstrass curve over Q.
    EllipticPeriod { curve: EllipticCurveQ },
}

impl PeriodSpec {
    /// Check the class's domain constraints.
    pub fn validate(&self) -> Result<()> {
        match self {
            PeriodSpec::AlgebraicNumber { minpoly } => {
                let mut p = minpoly.clone();
                poly_normalize(&mut p);
                if p.iter().all(Rational::is_zero) || poly_degree(&p) == 0 {
                    return Err(Error::DegenerateInput(
                        "minimal polynomial must have degree >= 1".into(),
                    ));
                }
                Ok(())
            }
            PeriodSpec::Pi => Ok(()),
            PeriodSpec::LogRational { q } => {
                if !q.is_positive() || q.is_one() {
                    return Err(Error::DomainError(format!(
                        "log class requires positive q != 1, got {q}"
                    )));
                }
                Ok(())
            }
            PeriodSpec::ZetaInt { s } => {
                if *s < 2 {
                    return Err(Error::DomainError(format!("zeta class requires s >= 2, got {s}")));
                }
                Ok(())
            }
            PeriodSpec::Mzv { composition } => {
                if !composition.is_admissible() {
                    return Err(Error::NonAdmissible);
                }
                Ok(())
            }
            PeriodSpec::GammaRational { x } => {
                if !x.is_positive() {
                    return Err(Error::DomainError(format!(
                        "gamma class requires x > 0, got {x}"
                    )));
                }
                Ok(())
            }
            PeriodSpec::EllipticPeriod { .. } => Ok(()),
        }
    }

    /// Canonical class tag used in reports and the serialized ledger.
    pub fn class_tag(&self) -> String {
        match self {
            PeriodSpec::AlgebraicNumber { minpoly } => {
                let coeffs: Vec<String> = minpoly.iter().map(|c| c.to_string()).collect();
                format!("algebraic[{}]", coeffs.join(","))
            }
            PeriodSpec::Pi => "pi".into(),
            PeriodSpec::LogRational { q } => format!("log({q})"),
            PeriodSpec::ZetaInt { s } => format!("zeta({s})"),
            PeriodSpec::Mzv { composition } => format!("zeta{composition}"),
            PeriodSpec::GammaRational { x } => format!("gamma({x})"),
            PeriodSpec::EllipticPeriod { curve } => {
                format!("elliptic(g2={},g3={})", curve.g2(), curve.g3())
            }
        }
    }
}

impl Serialize for PeriodSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.class_tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PeriodSpec::Pi.validate().is_ok());
        assert!(
            PeriodSpec::LogRational { q: "1".parse().unwrap() }
                .validate()
                .is_err()
        );
        assert!(
            PeriodSpec::LogRational { q: "-2".parse().unwrap() }
                .validate()
                .is_err()
        );
        assert!(PeriodSpec::ZetaInt { s: 1 }.validate().is_err());
        assert!(
            PeriodSpec::Mzv { composition: Composition::parse("1,2").unwrap() }
                .validate()
                .is_err()
        );
        assert!(
            PeriodSpec::AlgebraicNumber { minpoly: vec![Rational::from(3)] }
                .validate()
                .is_err()
        );
    }

    #[test]
    fn class_tags() {
        assert_eq!(PeriodSpec::Pi.class_tag(), "pi");
        assert_eq!(
            PeriodSpec::ZetaInt { s: 3 }.class_tag(),
            "zeta(3)"
        );
        assert_eq!(
            PeriodSpec::Mzv { composition: Composition::parse("3,1").unwrap() }.class_tag(),
            "zeta(3,1)"
        );
    }
}
