//! Empirical relation discovery: PSLQ integer relation detection with
//! mandatory re-verification, minimal polynomial recognition, and the
//! monomial census probing predicted transcendence degrees.

mod algebraicity;
mod census;
mod pslq;
mod source;

pub use algebraicity::{AlgebraicityResult, algebraicity_check};
pub use census::{CensusParams, CensusReport, FoundRelation, monomial_census, monomial_exponents};
pub use pslq::{RelationOutcome, RelationQuery, RelationResult, default_threshold_exp, normalize_primitive, pslq};
pub use source::NamedValue;
