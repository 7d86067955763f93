//! Numeric sampling of conjugate orbits: multiplicative orbits take
//! nonzero rational scalars, additive orbits take any rationals (0 gives
//! back the period itself), lattice orbits take rational pairs != (0,0),
//! and algebraic numbers index their finite root set.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::periods::{compute_log_rational, compute_mzv, compute_pi, compute_zeta, elliptic_periods};
use crate::poly::poly_roots;
use crate::rational::Rational;

use super::spec::PeriodSpec;

#[derive(Clone, Debug)]
pub enum OrbitParams {
    Scalars(Vec<Rational>),
    Pairs(Vec<(Rational, Rational)>),
}

#[derive(Clone, Debug)]
pub struct ConjugateSample {
    pub parameters: OrbitParams,
    pub values: Vec<Complex>,
}

/// Sample conjugates of the period class at the given parameters.
pub fn sample_conjugates(
    spec: &PeriodSpec,
    params: &OrbitParams,
    precision_bits: usize,
) -> Result<ConjugateSample> {
    spec.validate()?;
    let p = precision_bits;
    let values = match (spec, params) {
        (PeriodSpec::Pi, OrbitParams::Scalars(rs)) => {
            let pi = compute_pi(p + 16);
            rs.iter()
                .map(|r| {
                    if r.is_zero() {
                        return Err(Error::ZeroParameter(
                            "the orbit Q^x of pi excludes 0".into(),
                        ));
                    }
                    Ok(Complex::from_real(&pi * &r.to_real(p + 16)))
                })
                .collect::<Result<Vec<_>>>()?
        }
        (PeriodSpec::LogRational { q }, OrbitParams::Scalars(rs)) => {
            // conjugates log q + r·πi, r in Q (r = 0 is the period itself)
            let base = compute_log_rational(q, p + 16)?;
            let pi = compute_pi(p + 16);
            rs.iter()
                .map(|r| Complex::new(base.clone(), &pi * &r.to_real(p + 16)))
                .collect()
        }
        (PeriodSpec::ZetaInt { s }, OrbitParams::Scalars(rs)) => {
            let base = compute_zeta(*s, p + 16)?;
            if s % 2 == 0 {
                // even s: the class reduces to powers of π, orbit Q^x·ζ(s)
                rs.iter()
                    .map(|r| {
                        if r.is_zero() {
                            return Err(Error::ZeroParameter(
                                "the multiplicative orbit excludes 0".into(),
                            ));
                        }
                        Ok(Complex::from_real(&base * &r.to_real(p + 16)))
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                // odd s: conjugates ζ(s) + r·(πi)^s
                let pi_s = crate::elementary::powi_real(&compute_pi(p + 24), *s, p + 16)?;
                rs.iter()
                    .map(|r| {
                        let scaled = &pi_s * &r.to_real(p + 16);
                        // (πi)^s = i^s π^s; for odd s, i^s = ±i
                        let signed = if s % 4 == 1 { scaled } else { -scaled };
                        Ok(Complex::new(base.clone(), signed))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        }
        (PeriodSpec::Mzv { composition }, OrbitParams::Scalars(rs)) => {
            // no catalogued orbit rule beyond depth 1; the depth-1 case
            // coincides with the zeta class
            if composition.depth() == 1 {
                let s = composition.parts()[0] as i64;
                return sample_conjugates(&PeriodSpec::ZetaInt { s }, params, precision_bits);
            }
            let _ = (composition, rs);
            return Err(Error::NotCatalogued(
                "conjugate orbits of higher-depth MZVs are described only qualitatively".into(),
            ));
        }
        (PeriodSpec::GammaRational { .. }, _) => {
            return Err(Error::NotCatalogued(
                "Gamma orbits are catalogued only via torus character data, not sampled here".into(),
            ));
        }
        (PeriodSpec::AlgebraicNumber { minpoly }, OrbitParams::Scalars(ks)) => {
            let roots = poly_roots(minpoly, p)?;
            ks.iter()
                .map(|k| {
                    if !k.is_integer() {
                        return Err(Error::DomainError(
                            "algebraic conjugates are indexed by integers (1-based)".into(),
                        ));
                    }
                    let idx: i64 = k.numerator().try_into().map_err(|_| {
                        Error::DomainError("root index out of range".into())
                    })?;
                    if idx < 1 || idx as usize > roots.len() {
                        return Err(Error::DomainError(format!(
                            "root index {idx} out of range 1..={}",
                            roots.len()
                        )));
                    }
                    Ok(roots[idx as usize - 1].clone())
                })
                .collect::<Result<Vec<_>>>()?
        }
        (PeriodSpec::EllipticPeriod { curve }, OrbitParams::Pairs(ab)) => {
            let data = elliptic_periods(curve, p + 16)?;
            ab.iter()
                .map(|(a, b)| {
                    if a.is_zero() && b.is_zero() {
                        return Err(Error::ZeroParameter(
                            "the lattice orbit L_Q \\ 0 excludes (0,0)".into(),
                        ));
                    }
                    let wa = data.omega1.scale(&a.to_real(p + 16));
                    let wb = data.omega2.scale(&b.to_real(p + 16));
                    Ok(&wa + &wb)
                })
                .collect::<Result<Vec<_>>>()?
        }
        (PeriodSpec::EllipticPeriod { .. }, OrbitParams::Scalars(_)) => {
            return Err(Error::DomainError(
                "elliptic orbits take rational pairs (a, b)".into(),
            ));
        }
        (_, OrbitParams::Pairs(_)) => {
            return Err(Error::DomainError(
                "this class's orbit takes scalar parameters".into(),
            ));
        }
    };
    Ok(ConjugateSample { parameters: params.clone(), values })
}

/// The base period of a class as a complex value (the identity-parameter
/// conjugate).
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn base_period(spec: &PeriodSpec, precision_bits: usize) -> Result<Complex> {
    let p = precision_bits;
    Ok(match spec {
        PeriodSpec::Pi => Complex::from_real(compute_pi(p)),
        PeriodSpec::LogRational { q } => Complex::from_real(compute_log_rational(q, p)?),
        PeriodSpec::ZetaInt { s } => Complex::from_real(compute_zeta(*s, p)?),
        PeriodSpec::Mzv { composition } => Complex::from_real(compute_mzv(composition, p)?),
        PeriodSpec::GammaRational { x } => {
            Complex::from_real(crate::periods::compute_gamma_rational(x, p)?)
        }
        PeriodSpec::AlgebraicNumber { minpoly } => poly_roots(minpoly, p)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::DegenerateInput("no roots".into()))?,
        PeriodSpec::EllipticPeriod { curve } => elliptic_periods(curve, p)?.omega1,
    })
}
