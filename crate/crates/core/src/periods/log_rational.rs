//! Natural logarithms of positive rationals (Kummer periods).

use crate::elementary::log_real;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::real::Real;

/// log q for q in Q with q > 0, q != 1, certified to `2^-precision_bits`.
/// q = 1 is rejected: its logarithm is the non-period 0. Negative and
/// complex arguments are out of scope.
pub fn compute_log_rational(q: &Rational, precision_bits: usize) -> Result<Real> {
    if !q.is_positive() {
        return Err(Error::DomainError(format!(
            "log of non-positive rational {q} (negative/complex logs are out of scope)"
        )));
    }
    if q.is_one() {
        return Err(Error::DomainError(
            "log 1 = 0 is excluded (q must lie outside {-1, 0, 1})".into(),
        ));
    }
    let x = q.to_real(precision_bits + 32);
    let r = log_real(&x, precision_bits + 8)?;
    Ok(Real::certified(r.value().clone(), precision_bits))
}
