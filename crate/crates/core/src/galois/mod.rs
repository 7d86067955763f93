//! The conjectural Galois theory of periods as queryable data: per period
//! class, the catalogued group, conjugate orbit rule, motivic dimension,
//! predicted transcendence degree and theorem/conjecture status, plus CM
//! detection and numeric conjugate sampling.

mod cm;
mod conjugates;
mod descriptor;
mod probe;
mod spec;

pub use cm::{CM_J_INVARIANTS, CmDecision, detect_cm};
pub use conjugates::{ConjugateSample, OrbitParams, sample_conjugates};
pub use descriptor::{GaloisDescriptor, LedgerStatus, describe, predicted_trdeg};
pub use probe::{ProbeReport, RelationClass, consistency_probe};
pub use spec::PeriodSpec;
