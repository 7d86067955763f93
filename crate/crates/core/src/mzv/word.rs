//! Binary words over {x, y} and the standard encoding of admissible
//! compositions: (s1, ..., sk) <-> x^(s1-1) y ... x^(sk-1) y.

use std::fmt;

use crate::error::{Error, Result};

use super::composition::Composition;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// The duality x <-> y (iterated-integral form dt/t <-> dt/(1-t)).
    pub fn dual(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    letters: Vec<Letter>,
}

impl BinaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BinaryWord { letters }
    }

    pub fn empty() -> Self {
        BinaryWord { letters: vec![] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Encodes an admissible composition iff it starts with x and ends with y.
    pub fn is_admissible(&self) -> bool {
        matches!(self.letters.first(), Some(Letter::X))
            && matches!(self.letters.last(), Some(Letter::Y))
    }

    /// Reverse the word and dualize every letter (the Hölder-convolution
    /// transform of a prefix).
    pub fn reverse_dual(&self) -> BinaryWord {
        BinaryWord {
            letters: self.letters.iter().rev().map(|l| l.dual()).collect(),
        }
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord { letters: self.letters[..n].to_vec() }
    }

    pub fn suffix(&self, n: usize) -> BinaryWord {
        BinaryWord { letters: self.letters[n..].to_vec() }
    }

    /// Parse from a string of 'x'/'y' characters.
    pub fn parse(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                _ => Err(Error::Parse(format!("bad word letter `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::new)
    }

    /// Exponent list for a word ending in y: read maximal runs x^(e-1) y,
    /// giving a (not necessarily admissible) polylogarithm index.
    pub fn polylog_exponents(&self) -> Result<Vec<u32>> {
        if !matches!(self.letters.last(), Some(Letter::Y)) {
            return Err(Error::NonAdmissibleWord);
        }
        let mut out = Vec::new();
        let mut run = 0u32;
        for &l in &self.letters {
            match l {
                Letter::X => run += 1,
                Letter::Y => {
                    out.push(run + 1);
                    run = 0;
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", if *l == Letter::X { 'x' } else { 'y' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Encoding of an admissible composition.
pub fn word_of_composition(c: &Composition) -> BinaryWord {
    let mut letters = Vec::with_capacity(c.weight() as usize);
    for &s in c.parts() {
        for _ in 0..(s - 1) {
            letters.push(Letter::X);
        }
        letters.push(Letter::Y);
    }
    BinaryWord::new(letters)
}

/// Inverse of [`word_of_composition`]; fails on non-admissible words.
pub fn composition_of_word(w: &BinaryWord) -> Result<Composition> {
    if !w.is_admissible() {
        return Err(Error::NonAdmissibleWord);
    }
    Composition::new(w.polylog_exponents()?)
}
