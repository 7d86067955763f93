//! Sparse formal Q-linear combinations with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

/// A finite Q-linear combination of basis elements K; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum<K: Ord + Clone> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    pub fn singleton(key: K) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(key, Rational::one());
        s
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> FormalSum<K> {
        if c.is_zero() {
            return FormalSum::zero();
        }
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FormalSum<K>) -> FormalSum<K> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> FormalSum<L> {
        let mut out = FormalSum::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Sum of all coefficients (the "mass"; counts interleavings for
    /// shuffle products of distinct words).
    pub fn total_mass(&self) -> Rational {
        let mut acc = Rational::zero();
        for v in self.terms.values() {
            acc += v;
        }
        acc
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if v.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{v}*{k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_never_stored() {
        let mut s: FormalSum<&'static str> = FormalSum::zero();
        s.add_term("a", Rational::from(2));
        s.add_term("a", Rational::from(-2));
        assert!(s.is_zero());
        s.add_term("b", Rational::from(0));
        assert!(s.is_zero());
    }

    #[test]
    fn linear_structure() {
        let mut s: FormalSum<u32> = FormalSum::zero();
        s.add_term(1, Rational::from(3));
        s.add_term(2, Rational::new(1, 2).unwrap());
        let t = s.scale(&Rational::from(2));
        assert_eq!(t.coeff(&1), Rational::from(6));
        assert_eq!(t.coeff(&2), Rational::one());
        let d = t.sub(&t);
        assert!(d.is_zero());
    }
}
