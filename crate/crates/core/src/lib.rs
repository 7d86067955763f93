//! Periodlab: a computational laboratory for periods.
//!
//! The crate evaluates a catalogue of periods (π, log q, ζ(s), multiple zeta
//! values, Γ at rationals, elliptic periods and quasi-periods) to arbitrary
//! precision, searches for integer and polynomial relations among them, and
//! records the conjectural Galois data (conjugate orbits, groups, predicted
//! transcendence degrees) attached to each period class as queryable,
//! numerically testable entries.
//!
//! Every numeric value carries a certified error bound:
//!
//! ```
//! use periodlab_core::periods::{compute_pi, compute_zeta};
//!
//! let bits = periodlab_core::bits_for_digits(60);
//! let pi = compute_pi(bits);
//! assert!(pi.error_exp().unwrap() <= -(bits as i64));
//!
//! // 6 ζ(2) agrees with π² within the combined certified error
//! let z2 = compute_zeta(2, bits + 16).unwrap();
//! let residual = &(&z2 * &periodlab_core::Real::from_integer(6, bits + 16)) - &(&pi * &pi);
//! assert!(residual.is_zero_within_error());
//! ```

pub mod agm;
pub mod complex;
pub mod elementary;
pub mod error;
pub mod matrix;
pub mod memo;

pub mod poly;
pub mod rational;
pub mod real;

pub mod mzv;
pub mod periods;
pub mod relations;
pub mod galois;

pub use complex::Complex;
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use rational::Rational;
pub use real::{ErrorBound, Float, GUARD_BITS, Real};

/// Bits needed so that `10^-digits` is resolvable: `ceil(digits*log2(10))`.
pub fn bits_for_digits(digits: usize) -> usize {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize
}

/// Decimal digits certified by a precision in bits (floor).
pub fn digits_for_bits(bits: usize) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).floor() as usize
}
