//! Structured elements used by the vanishing theorems: fully symmetrized
//! interleave-and-shuffle elements over index triples, Bowman-Bradley
//! insertion sums, and the balanced block partitions that expand the
//! collapse of a symmetrized word.

use itertools::Itertools;
use num::BigRational;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::products::{collapse, factorial, set_partitions, Algebra};
use crate::word::Word;

/// Caps on m and n for the symmetrized builders (m!^2 growth).
pub const DEFAULT_SYMMETRIC_CAP: usize = 4;

/// An index triple: m odd letters `a`, m odd letters `b`, n even letters
/// `c`, with `(m, n) != (0, 0)`. Parity is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTriple {
    a: Vec<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IndexTriple {
    pub fn new(a: Vec<u64>, b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::MismatchedLists {
                a: a.len(),
                b: b.len(),
            });
        }
        if a.is_empty() && c.is_empty() {
            return Err(Error::EmptyIndexTriple);
        }
        for &x in a.iter().chain(&b) {
            if x == 0 {
                return Err(Error::ZeroLetter);
            }
            if x % 2 == 0 {
                return Err(Error::OddLetterRequired(x));
            }
        }
        for &x in &c {
            if x == 0 {
                return Err(Error::ZeroLetter);
            }
            if x % 2 == 1 {
                return Err(Error::EvenLetterRequired(x));
            }
        }
        Ok(IndexTriple { a, b, c })
    }

    /// Triple with `a`, `b`, `c` each repeated (`{a,b}^m` plus `{c}^n`).
    pub fn repeated(a: u64, b: u64, c: u64, m: usize, n: usize) -> Result<Self> {
        IndexTriple::new(vec![a; m], vec![b; m], vec![c; n])
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn c(&self) -> &[u64] {
        &self.c
    }
}

fn check_symmetric_caps(m: usize, n: usize) -> Result<()> {
    if m > DEFAULT_SYMMETRIC_CAP {
        return Err(Error::CapExceeded {
            what: "symmetrized element m",
            n: m,
            cap: DEFAULT_SYMMETRIC_CAP,
        });
    }
    if n > DEFAULT_SYMMETRIC_CAP {
        return Err(Error::CapExceeded {
            what: "symmetrized element n",
            n,
            cap: DEFAULT_SYMMETRIC_CAP,
        });
    }
    Ok(())
}

/// Sum over all orderings of the `a`s and `b`s of the interleaved word
/// `z_{a_s(1)} z_{b_t(1)} ... z_{a_s(m)} z_{b_t(m)}`, then shuffled with
/// each single-letter `z_c`.
///
/// On a repeated triple this collapses to
/// `m!^2 n! (z_a z_b)^m sh z_c^n`, which `bowman_bradley_sum` spells out.
pub fn symmetrized_element(alg: &Algebra, t: &IndexTriple) -> Result<Polynomial> {
    check_symmetric_caps(t.m(), t.n())?;
    let acc = symmetrized_base(t.a(), t.b());
    shuffle_in_letters(alg, acc, t.c())
}

/// `sum over s, t` of the interleaving of `a[s]` with `b[t]`; the unit
/// polynomial when `m = 0`.
fn symmetrized_base(a: &[u64], b: &[u64]) -> Polynomial {
    let m = a.len();
    if m == 0 {
        return Polynomial::one();
    }
    let mut acc = Polynomial::zero();
    for sigma in (0..m).permutations(m) {
        for tau in (0..m).permutations(m) {
            let mut letters = Vec::with_capacity(2 * m);
            for i in 0..m {
                letters.push(a[sigma[i]]);
                letters.push(b[tau[i]]);
            }
            acc.add_term(Word::from_raw(letters), BigRational::from_integer(1.into()));
        }
    }
    acc
}

fn shuffle_in_letters(alg: &Algebra, mut acc: Polynomial, letters: &[u64]) -> Result<Polynomial> {
    for &c in letters {
        acc = alg.sha(&acc, &Polynomial::from_word(Word::from_raw(vec![c])))?;
    }
    Ok(acc)
}

/// Sum over all insertions of `n` copies of `c` around the alternating
/// word `a, b, ..., a, b` (m pairs): one word per composition
/// `n_0 + ... + n_{2m} = n`.
pub fn bowman_bradley_sum(a: u64, b: u64, c: u64, m: usize, n: usize) -> Result<Polynomial> {
    if m == 0 && n == 0 {
        return Err(Error::EmptyIndexTriple);
    }
    check_symmetric_caps(m, n)?;
    if m > 0 {
        for x in [a, b] {
            if x == 0 {
                return Err(Error::ZeroLetter);
            }
            if x % 2 == 0 {
                return Err(Error::OddLetterRequired(x));
            }
        }
    }
    if n > 0 {
        if c == 0 {
            return Err(Error::ZeroLetter);
        }
        if c % 2 == 1 {
            return Err(Error::EvenLetterRequired(c));
        }
    }

    let mut acc = Polynomial::zero();
    for counts in compositions(n, 2 * m + 1) {
        // gaps alternate with the a, b letters
        let mut letters = Vec::new();
        for (i, &reps) in counts.iter().enumerate() {
            letters.extend(std::iter::repeat_n(c, reps));
            if i < 2 * m {
                letters.push(if i % 2 == 0 { a } else { b });
            }
        }
        acc.add_term(Word::from_raw(letters), BigRational::from_integer(1.into()));
    }
    Ok(acc)
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative
/// integers, in deterministic order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(idx: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == current.len() {
            current[idx] = remaining;
            out.push(current.clone());
            return;
        }
        for k in 0..=remaining {
            current[idx] = k;
            rec(idx + 1, remaining - k, current, out);
        }
    }
    let mut out = Vec::new();
    rec(0, total, &mut vec![0usize; parts], &mut out);
    out
}

/// One block of a balanced partition: the positions it covers, the letter
/// sum, and the a/b occupancy counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    positions: Vec<usize>,
    sum: u64,
    mu_a: usize,
    mu_b: usize,
}

impl Block {
    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn mu_a(&self) -> usize {
        self.mu_a
    }

    pub fn mu_b(&self) -> usize {
        self.mu_b
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

/// A partition of the 2m labeled a/b positions into blocks with
/// `|mu_a - mu_b| <= 1` each, classified into A blocks (one extra a),
/// B blocks (one extra b) and C blocks (balanced). A and B blocks always
/// come in equal numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    a_blocks: Vec<Block>,
    b_blocks: Vec<Block>,
    c_blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn a_blocks(&self) -> &[Block] {
        &self.a_blocks
    }

    pub fn b_blocks(&self) -> &[Block] {
        &self.b_blocks
    }

    pub fn c_blocks(&self) -> &[Block] {
        &self.c_blocks
    }

    /// `prod over blocks of mu_a! mu_b!` — the number of (s, t) pairs
    /// reproducing a given collapsed monomial.
    pub fn multiplicity(&self) -> BigRational {
        let mut out = BigRational::from_integer(1.into());
        for b in self
            .a_blocks
            .iter()
            .chain(&self.b_blocks)
            .chain(&self.c_blocks)
        {
            out *= factorial(b.mu_a) * factorial(b.mu_b);
        }
        out
    }
}

/// Enumerates all balanced partitions of the 2m labeled positions
/// (position i < m holds `a[i]`, position m + j holds `b[j]`).
/// Complete and duplicate-free; partitions of positions, so repeated
/// letter values never collapse blocks.
pub fn balanced_partitions(a: &[u64], b: &[u64]) -> Result<Vec<BlockPartition>> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::MismatchedLists { a: m, b: b.len() });
    }
    if m == 0 {
        return Err(Error::EmptyIndexTriple);
    }
    if m > DEFAULT_SYMMETRIC_CAP {
        return Err(Error::CapExceeded {
            what: "balanced partition m",
            n: m,
            cap: DEFAULT_SYMMETRIC_CAP,
        });
    }
    if a.iter().chain(b).any(|&x| x == 0) {
        return Err(Error::ZeroLetter);
    }

    let letter = |pos: usize| if pos < m { a[pos] } else { b[pos - m] };
    let mut out = Vec::new();
    'partition: for blocks in set_partitions(2 * m) {
        let mut classified = BlockPartition {
            a_blocks: Vec::new(),
            b_blocks: Vec::new(),
            c_blocks: Vec::new(),
        };
        for positions in blocks {
            let mu_a = positions.iter().filter(|&&p| p < m).count();
            let mu_b = positions.len() - mu_a;
            let block = Block {
                sum: positions.iter().map(|&p| letter(p)).sum(),
                positions,
                mu_a,
                mu_b,
            };
            if mu_a == mu_b + 1 {
                classified.a_blocks.push(block);
            } else if mu_b == mu_a + 1 {
                classified.b_blocks.push(block);
            } else if mu_a == mu_b {
                classified.c_blocks.push(block);
            } else {
                continue 'partition;
            }
        }
        debug_assert_eq!(classified.a_blocks.len(), classified.b_blocks.len());
        out.push(classified);
    }
    Ok(out)
}

/// The polynomial attached to a balanced partition: the multiplicity times
/// the symmetrized interleaving of the A/B block sums, shuffled with the
/// C block sums.
pub fn partition_element(alg: &Algebra, pi: &BlockPartition) -> Result<Polynomial> {
    let a_sums: Vec<u64> = pi.a_blocks.iter().map(Block::sum).collect();
    let b_sums: Vec<u64> = pi.b_blocks.iter().map(Block::sum).collect();
    let c_sums: Vec<u64> = pi.c_blocks.iter().map(Block::sum).collect();
    let base = symmetrized_base(&a_sums, &b_sums);
    let shuffled = shuffle_in_letters(alg, base, &c_sums)?;
    Ok(shuffled.scaled(&pi.multiplicity()))
}

/// Right-hand side of the partition expansion: the collapse map applied to
/// every interleaving of the `a`s and `b`s, summed over both orderings.
pub fn collapsed_symmetrization(a: &[u64], b: &[u64]) -> Polynomial {
    collapse(&symmetrized_base(a, b))
}
