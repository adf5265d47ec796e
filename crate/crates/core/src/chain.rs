//! Integer linear combinations of free homotopy classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::free_words::CyclicWord;

/// A finite formal sum `Σ cᵢ·⟨xᵢ⟩` with nonzero integer coefficients.
///
/// Terms are kept sorted by class (shortlex), so equality, iteration and
/// rendering are all deterministic.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    terms: BTreeMap<CyclicWord, i64>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn from_class(x: CyclicWord) -> Self {
        Chain::term(x, 1)
    }

    pub fn term(x: CyclicWord, coefficient: i64) -> Self {
        let mut c = Chain::zero();
        c.add_term(x, coefficient);
        c
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

    pub fn coefficient(&self, x: &CyclicWord) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, i64)> + '_ {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn add_term(&mut self, x: CyclicWord, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(x);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x.clone(), c);
        }
        out
    }

    pub fn negate(&self) -> Chain {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Chain {
        if k == 0 {
            return Chain::zero();
        }
        Chain {
            terms: self.terms.iter().map(|(x, &c)| (x.clone(), c * k)).collect(),
        }
    }

    /// Applies a function on classes and extends it linearly.
    pub fn map_classes<F: FnMut(&CyclicWord) -> CyclicWord>(&self, mut f: F) -> Chain {
        let mut out = Chain::zero();
        for (x, c) in self.terms() {
            out.add_term(f(x), c);
        }
        out
    }
}

impl FromIterator<(CyclicWord, i64)> for Chain {
    fn from_iter<I: IntoIterator<Item = (CyclicWord, i64)>>(iter: I) -> Self {
        let mut c = Chain::zero();
        for (x, k) in iter {
            c.add_term(x, k);
        }
        c
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        Chain::add(self, rhs)
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        Chain::add(self, &rhs.negate())
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.negate()
    }
}

/// `+1*(ab) -2*(aab)`; the zero chain renders as `0`.
impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c < 0 { '-' } else { '+' };
            write!(f, "{sign}{}*({x})", c.unsigned_abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chain[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CyclicWord {
        CyclicWord::parse(s, 26).unwrap()
    }

    #[test]
    fn arithmetic_prunes_zeros() {
        let ab = Chain::from_class(c("ab"));
        assert!(ab.add(&ab.scale(-1)).is_zero());
        assert!(Chain::from_class(c("a")).scale(0).is_zero());
        let two = Chain::from_class(c("a")).add(&Chain::from_class(c("b")));
        assert_eq!(two.len(), 2);
        assert_eq!(&two - &two, Chain::zero());
        assert_eq!(-&two, two.negate());
    }

    #[test]
    fn rendering() {
        assert_eq!(Chain::zero().to_string(), "0");
        let ch: Chain = [(c("aab"), -2), (c("ab"), 1)].into_iter().collect();
        assert_eq!(ch.to_string(), "+1*(ab) -2*(aab)");
        assert_eq!(Chain::from_class(CyclicWord::trivial()).to_string(), "+1*()");
    }

    #[test]
    fn map_classes_merges_terms() {
        let ch: Chain = [(c("ab"), 1), (c("ba"), 0), (c("a"), 2)].into_iter().collect();
        let collapsed = ch.map_classes(|_| c("b"));
        assert_eq!(collapsed, Chain::term(c("b"), 3));
    }
}
