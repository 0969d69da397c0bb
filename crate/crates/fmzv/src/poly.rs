//! Polynomials: finite rational-coefficient sums of words, kept in normal
//! form (no zero coefficients, canonical term order).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::word::Word;

/// An element of the word algebra: a finite map from words to nonzero
/// exact rational coefficients.
///
/// Terms iterate in canonical order (deeper words first, then
/// lexicographic), so equality, rendering and reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, BigRational>,
}

impl Polynomial {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// The unit polynomial `1` (empty word with coefficient one).
    pub fn one() -> Self {
        Polynomial::from_word(Word::empty())
    }

    /// The polynomial consisting of `w` with coefficient one.
    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigRational::one());
        Polynomial { terms }
    }

    /// A single term `c * w`; normalizes away `c = 0`.
    pub fn from_term(w: Word, c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(w, c);
        p
    }

    /// A constant polynomial `c * 1`.
    pub fn constant(c: BigRational) -> Self {
        Polynomial::from_term(Word::empty(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of `w` (zero if absent).
    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest term weight; 0 for the zero polynomial. Used as the weight
    /// of the polynomial when picking sweep thresholds.
    pub fn weight(&self) -> u64 {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    /// Adds `c * w` in place, dropping the term if the sum cancels.
    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Every coefficient multiplied by `c`; scaling by zero gives zero.
    pub fn scaled(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(w, q)| (w.clone(), q * c)).collect();
        Polynomial { terms }
    }

    /// Convenience integer scaling.
    pub fn scaled_int(&self, c: i64) -> Polynomial {
        self.scaled(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Adds `c * q` into `self`.
    pub fn add_scaled(&mut self, c: &BigRational, q: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &q.terms {
            self.add_term(w.clone(), x * c);
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scaled_int(-1)
    }
}

fn write_magnitude(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    let c = c.abs();
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form, e.g. `3/2 z3 z1 + z4`. This is exactly the form
/// the expression parser accepts back.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = c.abs().is_one();
            if unit_coeff {
                write!(f, "{w}")?;
            } else {
                write_magnitude(f, c)?;
                if !w.is_empty() {
                    write!(f, " {w}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;
    use num::rational::Ratio;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_cancels() {
        // (z2 + z3) + (-z3) = z2
        let mut p = Polynomial::from_word(word![2]);
        p += &Polynomial::from_word(word![3]);
        let q = Polynomial::from_word(word![3]).scaled_int(-1);
        p += &q;
        assert_eq!(p, Polynomial::from_word(word![2]));
    }

    #[test]
    fn zero_is_identity() {
        let p = Polynomial::from_word(word![2, 1]);
        assert_eq!(&Polynomial::zero() + &p, p);
    }

    #[test]
    fn rational_halves_sum_to_one() {
        let half = Polynomial::from_term(word![1], rat(1, 2));
        let sum = &half + &half;
        assert_eq!(sum, Polynomial::from_word(word![1]));
    }

    #[test]
    fn scaling() {
        let p = &Polynomial::from_word(word![3, 1]) + &Polynomial::from_word(word![4]);
        assert_eq!(p.scaled_int(0), Polynomial::zero());
        assert_eq!(p.scaled_int(1), p);
        let four = p.scaled_int(4);
        assert_eq!(four.coeff(&word![3, 1]), rat(4, 1));
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let mut p = Polynomial::zero();
        p += &Polynomial::from_word(word![2, 3]);
        p += &Polynomial::from_word(word![5]);
        let mut q = Polynomial::zero();
        q += &Polynomial::from_word(word![5]);
        q += &Polynomial::from_word(word![2, 3]);
        assert_eq!(p, q);
        assert_ne!(p, p.scaled_int(2));
    }

    #[test]
    fn zero_equals_empty() {
        let mut p = Polynomial::from_word(word![2]);
        p.add_term(word![2], rat(-1, 1));
        assert_eq!(p, Polynomial::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn weight_is_max_term_weight() {
        let p = &Polynomial::from_word(word![3, 1]) + &Polynomial::from_word(word![2]);
        assert_eq!(p.weight(), 4);
        assert_eq!(Polynomial::zero().weight(), 0);
    }

    #[test]
    fn render_canonical() {
        let mut p = Polynomial::from_term(word![3, 1], rat(3, 2));
        p += &Polynomial::from_word(word![4]);
        assert_eq!(p.to_string(), "3/2 z3 z1 + z4");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        let q = &Polynomial::from_word(word![2]) - &Polynomial::from_word(word![5]);
        assert_eq!(q.to_string(), "z2 - z5");
        let r = Polynomial::from_word(word![2]).scaled_int(-1);
        assert_eq!(r.to_string(), "-z2");
        let s = Polynomial::constant(rat(-3, 2));
        assert_eq!(s.to_string(), "-3/2");
    }

    #[test]
    fn term_iteration_is_canonical() {
        let mut p = Polynomial::zero();
        p += &Polynomial::from_word(word![3]);
        p += &Polynomial::from_word(word![1, 2]);
        p += &Polynomial::from_word(word![1, 1, 1]);
        p += &Polynomial::from_word(word![2, 1]);
        let order: Vec<String> = p.terms().map(|(w, _)| w.to_string()).collect();
        assert_eq!(order, vec!["z1 z1 z1", "z1 z2", "z2 z1", "z3"]);
    }
}
