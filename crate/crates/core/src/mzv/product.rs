//! The two exact product structures on MZV indices: the shuffle product of
//! binary words (iterated-integral interleaving) and the stuffle (harmonic)
//! product of compositions (series-index merging). Their difference is the
//! source of the finite double-shuffle relations.

use crate::error::Result;
use crate::rational::Rational;

use super::composition::Composition;
use super::formal::FormalSum;
use super::word::{BinaryWord, Letter, composition_of_word, word_of_composition};

/// Shuffle product of two binary words, with exact integer coefficients.
/// Bilinear, commutative, associative; the coefficient mass of the result
/// is binomial(|w1| + |w2|, |w1|).
pub fn shuffle(w1: &BinaryWord, w2: &BinaryWord) -> FormalSum<BinaryWord> {
    // dynamic program over suffix pairs, merging from the left
    fn go(
    a: &[Letter],
        b: &[Letter],
        memo: &mut std::collections::HashMap<(usize, usize), FormalSum<BinaryWord>>,
        na: usize,
        nb: usize,
    ) -> FormalSum<BinaryWord> {
        if a.is_empty() {
            return FormalSum::singleton(BinaryWord::new(b.to_vec()));
        }
        if b.is_empty() {
            return FormalSum::singleton(BinaryWord::new(a.to_vec()));
        }
        let key = (na - a.len(), nb - b.len());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut out = FormalSum::zero();
        let left = go(&a[1..], b, memo, na, nb);
        for (w, c) in left.iter() {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(a[0]);
            letters.extend_from_slice(w.letters());
            out.add_term(BinaryWord::new(letters), c.clone());
        }
        let right = go(a, &b[1..], memo, na, nb);
        for (w, c) in right.iter() {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(b[0]);
            letters.extend_from_slice(w.letters());
            out.add_term(BinaryWord::new(letters), c.clone());
        }
        memo.insert(key, out.clone());
        out
    }
    let mut memo = std::collections::HashMap::new();
    go(
        w1.letters(),
        w2.letters(),
        &mut memo,
        w1.len(),
        w2.len(),
    )
}

/// Stuffle (quasi-shuffle, harmonic) product of two compositions:
/// (s,u) * (t,v) = (s, u*(t,v)) + (t, (s,u)*v) + (s+t, u*v).
pub fn stuffle(c1: &Composition, c2: &Composition) -> FormalSum<Composition> {
    fn go(a: &[u32], b: &[u32]) -> Vec<(Vec<u32>, i64)> {
        if a.is_empty() {
            return vec![(b.to_vec(), 1)];
        }
        if b.is_empty() {
            return vec![(a.to_vec(), 1)];
        }
        let mut out = Vec::new();
        for (tail, c) in go(&a[1..], b) {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(a[0]);
            v.extend(tail);
            out.push((v, c));
        }
        for (tail, c) in go(a, &b[1..]) {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(b[0]);
            v.extend(tail);
            out.push((v, c));
        }
        for (tail, c) in go(&a[1..], &b[1..]) {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(a[0] + b[0]);
            v.extend(tail);
            out.push((v, c));
        }
        out
    }
    let mut sum = FormalSum::zero();
    for (parts, c) in go(c1.parts(), c2.parts()) {
        sum.add_term(Composition::new(parts).unwrap(), Rational::from(c));
    }
    sum
}

/// Shuffle product expressed in the admissible-composition basis: encode,
/// shuffle the words, decode. Shuffles of admissible words stay admissible.
pub fn shuffle_compositions(c1: &Composition, c2: &Composition) -> Result<FormalSum<Composition>> {
    let w = shuffle(&word_of_composition(c1), &word_of_composition(c2));
    let mut out = FormalSum::zero();
    for (word, coeff) in w.iter() {
        out.add_term(composition_of_word(word)?, coeff.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    fn word(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_letters() {
        let s = shuffle(&word("x"), &word("y"));
        assert_eq!(s.coeff(&word("xy")), Rational::one());
        assert_eq!(s.coeff(&word("yx")), Rational::one());
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn zeta2_squared_shuffle() {
        // xy ⧢ xy = 2 xyxy + 4 xxyy, encoding ζ(2)^2 = 2ζ(2,2) + 4ζ(3,1)
        let s = shuffle(&word("xy"), &word("xy"));
        assert_eq!(s.coeff(&word("xyxy")), Rational::from(2));
        assert_eq!(s.coeff(&word("xxyy")), Rational::from(4));
        assert_eq!(s.len(), 2);
        assert_eq!(s.total_mass(), Rational::from_integer(binomial(4, 2)));
    }

    #[test]
    fn mass_counts_interleavings() {
        let w1 = word("xxy");
        let w2 = word("xyy");
        let s = shuffle(&w1, &w2);
        assert_eq!(
            s.total_mass(),
            Rational::from_integer(binomial(6, 3))
        );
    }

    #[test]
    fn stuffle_basics() {
        // (2)*(3) = (2,3) + (3,2) + (5)
        let s = stuffle(&comp(&[2]), &comp(&[3]));
        assert_eq!(s.coeff(&comp(&[2, 3])), Rational::one());
        assert_eq!(s.coeff(&comp(&[3, 2])), Rational::one());
        assert_eq!(s.coeff(&comp(&[5])), Rational::one());
        assert_eq!(s.len(), 3);
        // (2)*(2) = 2(2,2) + (4)
        let s = stuffle(&comp(&[2]), &comp(&[2]));
        assert_eq!(s.coeff(&comp(&[2, 2])), Rational::from(2));
        assert_eq!(s.coeff(&comp(&[4])), Rational::one());
    }

    #[test]
    fn products_are_commutative() {
        let (a, b) = (comp(&[2, 1]), comp(&[3]));
        assert_eq!(stuffle(&a, &b), stuffle(&b, &a));
        let (u, v) = (word("xyy"), word("xxy"));
        assert_eq!(shuffle(&u, &v), shuffle(&v, &u));
    }

    #[test]
    fn products_are_associative() {
        let (a, b, c) = (comp(&[2]), comp(&[1, 1]), comp(&[3]));
        let left = stuffle_sum(&stuffle(&a, &b), &c);
        let right = stuffle_sum_r(&a, &stuffle(&b, &c));
        assert_eq!(left, right);

        let (u, v, w) = (word("xy"), word("y"), word("x"));
        let l = shuffle_sum(&shuffle(&u, &v), &w);
        let r = shuffle_sum_r(&u, &shuffle(&v, &w));
        assert_eq!(l, r);
    }

    fn stuffle_sum(s: &FormalSum<Composition>, c: &Composition) -> FormalSum<Composition> {
        let mut out = FormalSum::zero();
        for (k, v) in s.iter() {
            let p = stuffle(k, c);
            for (k2, v2) in p.iter() {
                out.add_term(k2.clone(), v * v2);
            }
        }
        out
    }

    fn stuffle_sum_r(c: &Composition, s: &FormalSum<Composition>) -> FormalSum<Composition> {
        let mut out = FormalSum::zero();
        for (k, v) in s.iter() {
            let p = stuffle(c, k);
            for (k2, v2) in p.iter() {
                out.add_term(k2.clone(), v * v2);
            }
        }
        out
    }

    fn shuffle_sum(s: &FormalSum<BinaryWord>, w: &BinaryWord) -> FormalSum<BinaryWord> {
        let mut out = FormalSum::zero();
        for (k, v) in s.iter() {
            let p = shuffle(k, w);
            for (k2, v2) in p.iter() {
                out.add_term(k2.clone(), v * v2);
            }
        }
        out
    }

    fn shuffle_sum_r(w: &BinaryWord, s: &FormalSum<BinaryWord>) -> FormalSum<BinaryWord> {
        let mut out = FormalSum::zero();
        for (k, v) in s.iter() {
            let p = shuffle(w, k);
            for (k2, v2) in p.iter() {
                out.add_term(k2.clone(), v * v2);
            }
        }
        out
    }

    #[test]
    fn admissible_closure_of_shuffle() {
        let s = shuffle_compositions(&comp(&[2]), &comp(&[2, 1])).unwrap();
        for (k, _) in s.iter() {
            assert!(k.is_admissible());
            assert_eq!(k.weight(), 5);
        }
    }
}
