//! Evaluation of the period catalogue: π, log q, ζ(s), multiple zeta
//! values, Γ at rationals, hypergeometric values, and elliptic period data.

mod elliptic;
mod gamma;
mod hypergeometric;
mod log_rational;
mod mzv;
mod pi;
mod series;
mod zeta;

pub use elliptic::{
    EllipticCurveQ, EllipticPeriodData, eisenstein_g2_g3, elliptic_periods, legendre_residual,
    reduce_tau_to_fundamental_domain,
};
pub use gamma::compute_gamma_rational;
pub use hypergeometric::hypergeometric_pfq;
pub use log_rational::compute_log_rational;
pub use mzv::compute_mzv;
pub use pi::{compute_pi, pi_float};
pub use series::{sigma_taylor, sinc_taylor};
pub use zeta::{bernoulli, compute_zeta};
