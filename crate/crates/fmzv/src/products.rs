//! The three bilinear products on the word algebra (shuffle `sh`, harmonic
//! `st`, signed harmonic `sb`), the block-collapse map `d`, and the
//! combinatorial expansions used by the identity suites.
//!
//! Products follow the defining recursions
//!
//! ```text
//! 1 sh w = w sh 1 = w
//! z_k w sh z_k' w' = z_k (w sh z_k' w') + z_k' (z_k w sh w')
//! z_k w st z_k' w' = z_k (w st z_k' w') + z_k' (z_k w st w') + z_{k+k'} (w st w')
//! z_k w sb z_k' w' = z_k (w sb z_k' w') + z_k' (z_k w sb w') - z_{k+k'} (w sb w')
//! ```
//!
//! extended bilinearly, with a dynamic program over suffix pairs so each
//! word pair is expanded once.

use num::{BigRational, One};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::word::Word;

/// Default cap on the combined depth of a word pair fed to a product.
/// Shuffle term counts grow as binomials of the total depth.
pub const DEFAULT_DEPTH_CAP: usize = 16;
/// Default cap on the letter count of the harmonic partition expansion
/// (Bell-number growth; Bell(7) = 877).
pub const DEFAULT_PARTITION_CAP: usize = 7;
/// Default cap on m + n for the matching expansion.
pub const DEFAULT_MATCHING_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Merge {
    /// Shuffle: no merged letter.
    None,
    /// Harmonic: `+ z_{k+k'} (w * w')`.
    Plus,
    /// Signed harmonic: `- z_{k+k'} (w *bar w')`.
    Minus,
}

/// Product context: the three products plus their size caps.
///
/// The struct is plain data; all methods are pure, so a shared `Algebra`
/// can be used concurrently.
#[derive(Debug, Clone, Copy)]
pub struct Algebra {
    /// Combined-depth cap for word pairs entering a product.
    pub depth_cap: usize,
    /// Letter-count cap for `partition_expand`.
    pub partition_cap: usize,
    /// m + n cap for `matching_expand`.
    pub matching_cap: usize,
}

impl Default for Algebra {
    fn default() -> Self {
        Algebra {
            depth_cap: DEFAULT_DEPTH_CAP,
            partition_cap: DEFAULT_PARTITION_CAP,
            matching_cap: DEFAULT_MATCHING_CAP,
        }
    }
}

impl Algebra {
    pub fn with_depth_cap(depth_cap: usize) -> Self {
        Algebra {
            depth_cap,
            ..Algebra::default()
        }
    }

    /// Shuffle product.
    pub fn sha(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.bilinear(p, q, Merge::None)
    }

    /// Harmonic product (merge term added).
    pub fn star(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.bilinear(p, q, Merge::Plus)
    }

    /// Signed harmonic product (merge term subtracted).
    pub fn star_bar(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.bilinear(p, q, Merge::Minus)
    }

    /// Left fold of `sha` over `polys`, starting from the unit.
    pub fn sha_all<'a>(
        &self,
        polys: impl IntoIterator<Item = &'a Polynomial>,
    ) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for p in polys {
            acc = self.sha(&acc, p)?;
        }
        Ok(acc)
    }

    /// Left fold of `star` over `polys`, starting from the unit.
    pub fn star_all<'a>(
        &self,
        polys: impl IntoIterator<Item = &'a Polynomial>,
    ) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for p in polys {
            acc = self.star(&acc, p)?;
        }
        Ok(acc)
    }

    fn bilinear(&self, p: &Polynomial, q: &Polynomial, merge: Merge) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for (wp, cp) in p.terms() {
            for (wq, cq) in q.terms() {
                let depth = wp.depth() + wq.depth();
                if depth > self.depth_cap {
                    return Err(Error::DepthLimitExceeded {
                        depth,
                        cap: self.depth_cap,
                    });
                }
                let prod = product_words(wp.letters(), wq.letters(), merge);
                acc.add_scaled(&(cp * cq), &prod);
            }
        }
        Ok(acc)
    }

    /// Alternating sum pairing the collapsed reversed prefixes of `w` with
    /// its suffixes under the harmonic product:
    /// `sum_{j=0}^{l} (-1)^j d(z_{k_j} ... z_{k_1}) st z_{k_{j+1}} ... z_{k_l}`.
    ///
    /// Identically zero for every nonempty word; the empty word is
    /// rejected (the sum would degenerate to 1).
    pub fn semi_reversal_sum(&self, w: &Word) -> Result<Polynomial> {
        let letters = w.letters();
        let l = letters.len();
        if l == 0 {
            return Err(Error::EmptyWord);
        }
        let mut acc = Polynomial::zero();
        for j in 0..=l {
            let mut prefix_rev: Vec<u64> = letters[..j].to_vec();
            prefix_rev.reverse();
            let left = collapse(&Polynomial::from_word(Word::from_raw(prefix_rev)));
            let right = Polynomial::from_word(Word::from_raw(letters[j..].to_vec()));
            let term = self.star(&left, &right)?;
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc = &acc - &term;
            }
        }
        Ok(acc)
    }

    /// Expands the iterated harmonic product of single letters as a sum of
    /// shuffle products over set partitions: for letters `k_1..k_n`,
    /// returns `sum over partitions P of {1..n}` of the shuffle product of
    /// `z_{sum of k_i, i in block}` over the blocks of `P`.
    ///
    /// Equal to `z_{k1} st ... st z_{kn}`; that equality is what the
    /// identity suite checks.
    pub fn partition_expand(&self, letters: &[u64]) -> Result<Polynomial> {
        let n = letters.len();
        if n == 0 || n > self.partition_cap {
            return Err(Error::CapExceeded {
                what: "partition expansion",
                n,
                cap: self.partition_cap,
            });
        }
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        let mut acc = Polynomial::zero();
        for blocks in set_partitions(n) {
            let sums: Vec<Polynomial> = blocks
                .iter()
                .map(|block| {
                    let s = block.iter().map(|&i| letters[i]).sum();
                    Polynomial::from_word(Word::from_raw(vec![s]))
                })
                .collect();
            acc += &self.sha_all(&sums)?;
        }
        Ok(acc)
    }

    /// Expands `z_{a1} z_{b1} ... z_{am} z_{bm} st (z_{c1} sh ... sh z_{cn})`
    /// as a sum over partial matchings between the 2m interleaved a/b
    /// positions and the c positions: a matched position absorbs its c
    /// letter, and the unmatched c letters are shuffled back in.
    ///
    /// Vertices are labeled, so equal letters at different positions count
    /// separately; equal words merge in the normal form.
    pub fn matching_expand(&self, a: &[u64], b: &[u64], c: &[u64]) -> Result<Polynomial> {
        let m = a.len();
        let n = c.len();
        if b.len() != m {
            return Err(Error::MismatchedLists { a: m, b: b.len() });
        }
        if m == 0 {
            return Err(Error::EmptyWord);
        }
        if m + n > self.matching_cap {
            return Err(Error::CapExceeded {
                what: "matching expansion",
                n: m + n,
                cap: self.matching_cap,
            });
        }
        if a.iter().chain(b).chain(c).any(|&k| k == 0) {
            return Err(Error::ZeroLetter);
        }

        // interleaved left positions: a1, b1, a2, b2, ...
        let mut left = Vec::with_capacity(2 * m);
        for i in 0..m {
            left.push(a[i]);
            left.push(b[i]);
        }

        let mut acc = Polynomial::zero();
        // assignment[i] = Some(j) matches left position i with c position j
        let mut assignment: Vec<Option<usize>> = vec![None; 2 * m];
        let mut used = vec![false; n];
        self.matchings(&left, c, 0, &mut assignment, &mut used, &mut acc)?;
        Ok(acc)
    }

    fn matchings(
        &self,
        left: &[u64],
        c: &[u64],
        i: usize,
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        acc: &mut Polynomial,
    ) -> Result<()> {
        if i == left.len() {
            let letters: Vec<u64> = left
                .iter()
                .enumerate()
                .map(|(k, &x)| x + assignment[k].map_or(0, |j| c[j]))
                .collect();
            let mut term = Polynomial::from_word(Word::from_raw(letters));
            for (j, &cj) in c.iter().enumerate() {
                if !used[j] {
                    term = self.sha(&term, &Polynomial::from_word(Word::from_raw(vec![cj])))?;
                }
            }
            *acc += &term;
            return Ok(());
        }
        assignment[i] = None;
        self.matchings(left, c, i + 1, assignment, used, acc)?;
        for j in 0..c.len() {
            if !used[j] {
                used[j] = true;
                assignment[i] = Some(j);
                self.matchings(left, c, i + 1, assignment, used, acc)?;
                assignment[i] = None;
                used[j] = false;
            }
        }
        Ok(())
    }
}

/// Word-level product with a DP over suffix pairs.
fn product_words(u: &[u64], v: &[u64], merge: Merge) -> Polynomial {
    let (lu, lv) = (u.len(), v.len());
    // table[i][j] = product of u[i..] and v[j..]
    let mut table: Vec<Vec<Polynomial>> = vec![vec![Polynomial::zero(); lv + 1]; lu + 1];
    for i in (0..=lu).rev() {
        for j in (0..=lv).rev() {
            table[i][j] = if i == lu {
                Polynomial::from_word(Word::from_raw(v[j..].to_vec()))
            } else if j == lv {
                Polynomial::from_word(Word::from_raw(u[i..].to_vec()))
            } else {
                let mut out = prepend(u[i], &table[i + 1][j]);
                out += &prepend(v[j], &table[i][j + 1]);
                match merge {
                    Merge::None => {}
                    Merge::Plus => out += &prepend(u[i] + v[j], &table[i + 1][j + 1]),
                    Merge::Minus => {
                        out = &out - &prepend(u[i] + v[j], &table[i + 1][j + 1]);
                    }
                }
                out
            };
        }
    }
    table[0][0].clone()
}

fn prepend(letter: u64, p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in p.terms() {
        out.add_term(w.prepended(letter), c.clone());
    }
    out
}

/// The block-collapse map `d`: linear extension of
///
/// ```text
/// d(z_{k1} ... z_{kn}) = sum over groupings of consecutive letters,
///                        each group replaced by the sum of its letters
/// ```
///
/// with `d(1) = 1`. A depth-n word expands into 2^(n-1) terms before
/// collection; every output word has the weight of its input word.
pub fn collapse(p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (w, c) in p.terms() {
        let letters = w.letters();
        let n = letters.len();
        if n == 0 {
            acc.add_term(Word::empty(), c.clone());
            continue;
        }
        // bit i of mask set = cut between letters i and i+1
        for mask in 0..(1u64 << (n - 1)) {
            let mut grouped = Vec::new();
            let mut run = letters[0];
            for (i, &letter) in letters.iter().enumerate().skip(1) {
                if mask >> (i - 1) & 1 == 1 {
                    grouped.push(run);
                    run = letter;
                } else {
                    run += letter;
                }
            }
            grouped.push(run);
            acc.add_term(Word::from_raw(grouped), c.clone());
        }
    }
    acc
}

/// All set partitions of `{0..n-1}`, each as a list of blocks; blocks are
/// ordered by their smallest element. Enumeration order is deterministic.
pub(crate) fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    rec(0, n, &mut blocks, &mut out);
    out
}

/// `n!` as an exact rational.
pub fn factorial(n: usize) -> BigRational {
    let mut out = BigRational::one();
    for k in 2..=n {
        out *= BigRational::from_integer(k.into());
    }
    out
}
