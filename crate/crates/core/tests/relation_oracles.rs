//! PSLQ-based oracles for the MZV evaluations, and numeric contraction of
//! the double-shuffle relation rows against high-precision values.

use dashu_int::IBig;
use periodlab_core::mzv::{admissible_compositions, double_shuffle_relations};
use periodlab_core::periods::{compute_mzv, compute_pi};
use periodlab_core::real::Real;
use periodlab_core::relations::{NamedValue, RelationOutcome, RelationQuery, pslq};

#[test]
fn pslq_confirms_360_zeta31_is_pi4() {
    // 360 ζ(3,1) - π⁴ = 0
    let query = RelationQuery {
        values: vec![
            NamedValue::new("zeta(3,1)", |b| {
                compute_mzv(&periodlab_core::mzv::Composition::parse("3,1").unwrap(), b)
            }),
            NamedValue::new("pi^4", |b| {
                let pi = compute_pi(b + 16);
                let p2 = &pi * &pi;
                Ok(&p2 * &p2)
            }),
        ],
        precision_bits: periodlab_core::bits_for_digits(100),
        max_coeff_norm: 2000,
        detect_threshold_exp: None,
    };
    match pslq(&query).unwrap().outcome {
        RelationOutcome::Found { coefficients, residual_exp } => {
            let want: Vec<IBig> = [360, -1].iter().map(|&v| IBig::from(v)).collect();
            assert_eq!(coefficients, want);
            assert!(residual_exp < -400);
        }
        other => panic!("expected 360ζ(3,1) = π⁴, got {other:?}"),
    }
}

#[test]
fn double_shuffle_rows_contract_numerically() {
    // every relation row at weights 4 and 5, against 60-digit values
    let bits = periodlab_core::bits_for_digits(60);
    let bound = -((50.0 * std::f64::consts::LOG2_10) as i64);
    for weight in [4u32, 5] {
        let m = double_shuffle_relations(weight).unwrap();
        let basis = admissible_compositions(weight).unwrap();
        assert!(m.rows() > 0, "weight {weight} should have relation rows");
        for r in 0..m.rows() {
            let mut acc = Real::zero(bits + 32);
            for (coeff, comp) in m.row(r).iter().zip(&basis) {
                if coeff.is_zero() {
                    continue;
                }
                let v = compute_mzv(comp, bits + 16).unwrap();
                acc = &acc + &(&coeff.to_real(bits + 32) * &v);
            }
            assert!(
                acc.stored_abs_le_pow2(bound),
                "weight {weight} row {r} residual {acc:?}"
            );
        }
    }
}
