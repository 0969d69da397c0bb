//! Words: noncommutative monomials `z_{k1} ... z_{kn}` in positive-integer
//! letters. The empty word is the multiplicative unit.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the letters `z_1, z_2, ...`, stored as its letter sequence.
///
/// Words order by the canonical term order used everywhere in this crate:
/// deeper words first, ties broken lexicographically on the letters. That
/// makes `BTreeMap<Word, _>` iteration (and hence rendering) deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u64>,
}

impl Word {
    /// The empty word, i.e. the unit `1`.
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    /// Builds a word from its letters; every letter must be `>= 1`.
    pub fn new(letters: impl Into<Vec<u64>>) -> Result<Self> {
        let letters = letters.into();
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word { letters })
    }

    /// Single-letter word `z_k`.
    pub fn single(k: u64) -> Result<Self> {
        Word::new(vec![k])
    }

    /// Internal constructor for letters already known to be positive.
    pub(crate) fn from_raw(letters: Vec<u64>) -> Self {
        debug_assert!(letters.iter().all(|&k| k >= 1));
        Word { letters }
    }

    pub fn letters(&self) -> &[u64] {
        &self.letters
    }

    /// Number of letters.
    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    /// Sum of the letters; 0 for the empty word.
    pub fn weight(&self) -> u64 {
        self.letters.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with the letters in reverse order.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// New word with `letter` prepended.
    pub(crate) fn prepended(&self, letter: u64) -> Word {
        debug_assert!(letter >= 1);
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .letters
            .len()
            .cmp(&self.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for k in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "z{k}")?;
            first = false;
        }
        Ok(())
    }
}

/// Convenience constructor used pervasively in tests: `word![3, 1]`.
#[macro_export]
macro_rules! word {
    () => { $crate::Word::empty() };
    ($($k:expr),+ $(,)?) => { $crate::Word::new(vec![$($k as u64),+]).unwrap() };
}
