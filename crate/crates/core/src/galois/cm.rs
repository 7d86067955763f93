//! Complex multiplication detection for curves over Q.
//!
//! Fast path: the exact rational j-invariant. A curve over Q has CM iff
//! its endomorphism order has class number 1, so the j-invariant must be
//! one of the thirteen rational CM values; anything else is certified
//! non-CM with no numerics at all. Table hits are then confirmed by the
//! algebraicity of τ (degree 2), recovering the τ minimal polynomial and
//! the quadratic field.

use dashu_int::IBig;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::periods::{EllipticCurveQ, elliptic_periods};
use crate::rational::Rational;
use crate::relations::{AlgebraicityResult, NamedValue, algebraicity_check};

/// The thirteen rational CM j-invariants: (order discriminant, j).
pub const CM_J_INVARIANTS: [(i64, i128); 13] = [
    (-3, 0),
    (-4, 1728),
    (-7, -3375),
    (-8, 8000),
    (-11, -32768),
    (-12, 54000),
    (-16, 287496),
    (-19, -884736),
    (-27, -12288000),
    (-28, 16581375),
    (-43, -884736000),
    (-67, -147197952000),
    (-163, -262537412640768000),
];

fn field_disc_of_order(order_disc: i64) -> i64 {
    match order_disc {
        -12 | -27 => -3,
        -16 => -4,
        -28 => -7,
        d => d,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CmDecision {
    pub is_cm: bool,
    /// Exact rational j-invariant.
    pub j: Rational,
    /// Discriminant of the endomorphism order (CM only).
    pub order_disc: Option<i64>,
    /// Discriminant of the CM field K (CM only).
    pub field_disc: Option<i64>,
    /// Integer minimal polynomial of τ, ascending (CM only).
    #[serde(serialize_with = "ser_poly")]
    pub tau_minpoly: Option<Vec<IBig>>,
}

fn ser_poly<S: serde::Serializer>(
    p: &Option<Vec<IBig>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match p {
        None => s.serialize_none(),
        Some(v) => s.serialize_some(&v.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
    }
}

/// Decide CM for a nonsingular curve over Q.
pub fn detect_cm(
    e: &EllipticCurveQ,
    precision_bits: usize,
    max_coeff_norm: u64,
) -> Result<CmDecision> {
    let j = e.j_invariant();
    let table_hit = if j.is_integer() {
        let jn: std::result::Result<i128, _> = j.numerator().try_into();
        jn.ok()
            .and_then(|val| CM_J_INVARIANTS.iter().find(|(_, tj)| *tj == val))
            .copied()
    } else {
        None
    };
    let Some((order_disc, _)) = table_hit else {
        // exact: rational non-CM j certifies non-CM for curves over Q
        return Ok(CmDecision {
            is_cm: false,
            j,
            order_disc: None,
            field_disc: None,
            tau_minpoly: None,
        });
    };

    // confirm via algebraicity of τ: reduced CM τ has Re ∈ {0, ±1/2},
    // so Im τ is quadratic over Q and the τ polynomial is assembled from
    // m = round(2 Re τ) and the recognized rational (Im τ)².
    let data = elliptic_periods(e, precision_bits)?;
    let two_re = data.tau.re.mul_pow2(1);
    let m = crate::real::float_round_to_ibig(two_re.value());
    let m_i: i64 = m.clone().try_into().map_err(|_| {
        Error::PrecisionExhausted("unexpected Re tau in CM confirmation".into())
    })?;
    if !(-1..=1).contains(&m_i) {
        return Err(Error::PrecisionExhausted(format!(
            "CM confirmation: Re tau not in {{0, ±1/2}} (2 Re tau rounds to {m_i})"
        )));
    }
    let off_axis = &two_re - &crate::real::Real::from_integer(m.clone(), precision_bits);
    if !off_axis.abs_le_pow2(-(precision_bits as i64 / 2)) {
        return Err(Error::PrecisionExhausted(
            "CM confirmation: Re tau not certifiably half-integral".into(),
        ));
    }

    let curve = e.clone();
    let im_tau = NamedValue::new("Im(tau)", move |bits| {
        Ok(elliptic_periods(&curve, bits)?.tau.im)
    });
    let alg = algebraicity_check(&im_tau, 2, max_coeff_norm, precision_bits)?;
    let AlgebraicityResult::Found { polynomial, .. } = alg else {
        return Err(Error::PrecisionExhausted(
            "CM table hit but tau algebraicity did not confirm".into(),
        ));
    };
    // Im τ satisfies a*y² + b*y + c; a pure square root has b = 0 for
    // degree 2, or degree 1 with rational value
    let y_sq: Rational = match polynomial.len() {
        2 => {
            let y = Rational::new(-polynomial[0].clone(), polynomial[1].clone())?;
            &y * &y
        }
        3 => {
            if polynomial[1] != IBig::ZERO {
                return Err(Error::PrecisionExhausted(
                    "CM confirmation: Im tau quadratic has a linear term".into(),
                ));
            }
            Rational::new(-polynomial[0].clone(), polynomial[2].clone())?
        }
        _ => {
            return Err(Error::PrecisionExhausted(
                "CM confirmation: unexpected Im tau polynomial".into(),
            ));
        }
    };
    // τ = m/2 + i y: τ² - m τ + (m²/4 + y²) = 0, cleared to integers
    let quarter_term = &(&Rational::from_integer(m.clone())
        * &Rational::from_integer(m.clone()))
        / &Rational::from(4);
    let c0 = &quarter_term + &y_sq;
    let tau_poly = clear_quadratic(&c0, &-Rational::from_integer(m));
    // the quadratic discriminant must reproduce the order discriminant
    let disc = &tau_poly[1] * &tau_poly[1] - IBig::from(4) * &tau_poly[0] * &tau_poly[2];
    let disc_i: i64 = disc.try_into().unwrap_or(i64::MIN);
    if disc_i != order_disc {
        return Err(Error::PrecisionExhausted(format!(
            "CM confirmation: tau discriminant {disc_i} does not match table value {order_disc}"
        )));
    }

    Ok(CmDecision {
        is_cm: true,
        j,
        order_disc: Some(order_disc),
        field_disc: Some(field_disc_of_order(order_disc)),
        tau_minpoly: Some(tau_poly),
    })
}

/// x² + b x + c with rational b, c, cleared to a primitive integer
/// polynomial with positive leading coefficient (ascending order).
fn clear_quadratic(c: &Rational, b: &Rational) -> Vec<IBig> {
    use dashu_int::UBig;
    use dashu_int::ops::Gcd;
    let mut lcm = UBig::ONE;
    for r in [c, b] {
        let d = r.denominator().clone();
        let g = lcm.clone().gcd(d.clone());
        lcm = lcm / g * d;
    }
    let scale = Rational::from_integer(IBig::from(lcm));
    let coeffs = vec![
        (c * &scale).numerator().clone(),
        (b * &scale).numerator().clone(),
        scale.numerator().clone(),
    ];
    let mut out = crate::relations::normalize_primitive(coeffs);
    if *out.last().unwrap() < IBig::ZERO {
        for v in out.iter_mut() {
            *v = -v.clone();
        }
    }
    out
}
