//! Recomputable named values. Relation detection re-verifies every
//! candidate at doubled precision, so query inputs are providers that can
//! be evaluated at any requested precision, not frozen floats.

use std::sync::Arc;

use crate::error::Result;
use crate::rational::Rational;
use crate::real::Real;

type SourceFn = dyn Fn(usize) -> Result<Real> + Send + Sync;

/// A named, precision-parametric real value.
#[derive(Clone)]
pub struct NamedValue {
    name: String,
    source: Arc<SourceFn>,
}

impl NamedValue {
    pub fn new(name: impl Into<String>, f: impl Fn(usize) -> Result<Real> + Send + Sync + 'static) -> Self {
        NamedValue { name: name.into(), source: Arc::new(f) }
    }

    pub fn from_rational(name: impl Into<String>, r: Rational) -> Self {
        NamedValue::new(name, move |bits| Ok(r.to_real(bits)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, precision_bits: usize) -> Result<Real> {
        (self.source)(precision_bits)
    }

    /// The k-th power of this value as a derived source.
    pub fn power(&self, k: u32) -> NamedValue {
        let base = self.clone();
        let name = if k == 1 {
            base.name.clone()
        } else {
            format!("{}^{}", base.name, k)
        };
        NamedValue::new(name, move |bits| {
            let v = base.eval(bits + 8 * k as usize)?;
            crate::elementary::powi_real(&v, k as i64, bits)
        })
    }

    /// Product of two sources.
    pub fn product(&self, other: &NamedValue) -> NamedValue {
        let a = self.clone();
        let b = other.clone();
        NamedValue::new(format!("{}*{}", a.name, b.name), move |bits| {
            Ok(&a.eval(bits + 16)? * &b.eval(bits + 16)?)
        })
    }

    /// Scale by an exact rational.
    pub fn scaled(&self, c: Rational, name: impl Into<String>) -> NamedValue {
        let base = self.clone();
        NamedValue::new(name, move |bits| {
            Ok(&base.eval(bits + 16)? * &c.to_real(bits + 16))
        })
    }
}

impl std::fmt::Debug for NamedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "NamedValue({})", self.name)
    }
}
