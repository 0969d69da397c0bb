//! Per-prime evaluation of truncated multiple harmonic sums.
//!
//! `zeta` computes `sum over p > m_1 > ... > m_n >= 1` of
//! `prod m_i^{-k_i}` mod p; `zeta_star` uses non-strict inequalities.
//! Both run a dynamic program with prefix sums, one pass per letter, so a
//! depth-n word costs `O(n * p)` multiplications after table setup.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{BigRational, Integer, ToPrimitive};

use crate::error::{Error, Result};
use crate::modp::primes::PrimeModulus;
use crate::poly::Polynomial;
use crate::word::Word;

/// Caps for the literal nested-loop oracle, which costs `O(p^depth)`.
const BRUTE_MAX_P: u64 = 101;
const BRUTE_MAX_DEPTH: usize = 4;

/// A residue together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        debug_assert!(value < modulus.get());
        Residue { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Table of modular inverses: `table[m] * m == 1 (mod p)` for
/// `1 <= m < p`; index 0 is unused. Built in O(p) by the usual
/// recurrence `inv(i) = -(p / i) * inv(p mod i)`.
pub fn mod_inverse_table(p: PrimeModulus) -> Vec<u64> {
    let p = p.get();
    let n = p as usize;
    let mut inv = vec![0u64; n.max(2)];
    if n > 1 {
        inv[1] = 1;
    }
    for m in 2..n {
        let q = p / m as u64;
        let r = (p % m as u64) as usize;
        inv[m] = (p - q % p) * inv[r] % p;
    }
    inv
}

/// Per-prime evaluation context: the inverse table plus cached
/// inverse-power tables, keyed by exponent. Sweeps reuse exponents
/// heavily, so `m^{-k}` for all `m` is computed once per `(p, k)`.
pub struct PrimeEvaluator {
    modulus: PrimeModulus,
    inv: Vec<u64>,
    inv_pow: HashMap<u64, Arc<Vec<u64>>>,
}

impl PrimeEvaluator {
    pub fn new(modulus: PrimeModulus) -> Self {
        PrimeEvaluator {
            modulus,
            inv: mod_inverse_table(modulus),
            inv_pow: HashMap::new(),
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// `m^{-k} mod p` for all `1 <= m < p` (index 0 unused). Cached.
    fn inv_pow_table(&mut self, k: u64) -> Arc<Vec<u64>> {
        if let Some(t) = self.inv_pow.get(&k) {
            return Arc::clone(t);
        }
        let p = self.modulus.get();
        // Fermat: exponents act mod p - 1 on units
        let e = if p > 2 { k % (p - 1) } else { 0 };
        let table: Vec<u64> = self.inv.iter().map(|&x| pow_mod(x, e, p)).collect();
        let table = Arc::new(table);
        self.inv_pow.insert(k, Arc::clone(&table));
        table
    }

    /// Strict truncated harmonic sum of `w` mod p.
    pub fn zeta(&mut self, w: &Word) -> Residue {
        self.chain_sum(w, true)
    }

    /// Non-strict truncated harmonic sum of `w` mod p.
    pub fn zeta_star(&mut self, w: &Word) -> Residue {
        self.chain_sum(w, false)
    }

    /// Evaluates either variant, selected by `star`.
    pub fn zeta_variant(&mut self, w: &Word, star: bool) -> Residue {
        if star {
            self.zeta_star(w)
        } else {
            self.zeta(w)
        }
    }

    fn chain_sum(&mut self, w: &Word, strict: bool) -> Residue {
        let p = self.modulus.get();
        let n = p as usize;
        let letters = w.letters();
        if letters.is_empty() {
            return Residue::new(1 % p, self.modulus);
        }
        // prefix[m] = sum over admissible chains starting at values <= m
        // of the product of the remaining letters' inverse powers
        let mut prefix: Vec<u64> = Vec::new();
        for (level, &k) in letters.iter().enumerate().rev() {
            let table = self.inv_pow_table(k);
            let innermost = level == letters.len() - 1;
            let mut next = vec![0u64; n];
            let mut run = 0u64;
            for m in 1..n {
                let f = if innermost {
                    table[m]
                } else {
                    let inner = if strict { prefix[m - 1] } else { prefix[m] };
                    table[m] * inner % p
                };
                run = (run + f) % p;
                next[m] = run;
            }
            prefix = next;
        }
        Residue::new(prefix[n - 1], self.modulus)
    }

    /// Linear extension over the polynomial's terms: each coefficient is
    /// reduced mod p and multiplied into the word's sum. A denominator
    /// divisible by p makes the value undefined at this prime.
    pub fn eval_poly(&mut self, poly: &Polynomial, star: bool) -> Result<Residue> {
        let p = self.modulus.get();
        let mut acc = 0u64;
        for (w, c) in poly.terms() {
            let coeff = self.rational_mod(c)?;
            let z = self.zeta_variant(w, star).value();
            acc = (acc + coeff * z) % p;
        }
        Ok(Residue::new(acc, self.modulus))
    }

    fn rational_mod(&self, c: &BigRational) -> Result<u64> {
        let p = self.modulus.get();
        let pm = BigInt::from(p);
        let num = c.numer().mod_floor(&pm).to_u64().expect("reduced mod p");
        let den = c.denom().mod_floor(&pm).to_u64().expect("reduced mod p");
        if den == 0 {
            return Err(Error::DenominatorDivisible { p });
        }
        let den_inv = pow_mod(den, p - 2, p);
        Ok(num * den_inv % p)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Ground-truth oracle: the literal nested-loop summation. Exponential in
/// depth, so capped at `p <= 101`, depth <= 4.
pub fn zeta_bruteforce(w: &Word, modulus: PrimeModulus, star: bool) -> Result<Residue> {
    let p = modulus.get();
    if p > BRUTE_MAX_P {
        return Err(Error::CapExceeded {
            what: "brute-force prime",
            n: p as usize,
            cap: BRUTE_MAX_P as usize,
        });
    }
    if w.depth() > BRUTE_MAX_DEPTH {
        return Err(Error::CapExceeded {
            what: "brute-force depth",
            n: w.depth(),
            cap: BRUTE_MAX_DEPTH,
        });
    }
    let inv = mod_inverse_table(modulus);
    let letters = w.letters();
    fn rec(letters: &[u64], idx: usize, hi: u64, inv: &[u64], p: u64, star: bool) -> u64 {
        if idx == letters.len() {
            return 1 % p;
        }
        let e = if p > 2 { letters[idx] % (p - 1) } else { 0 };
        let mut total = 0u64;
        for m in 1..=hi {
            let term = pow_mod(inv[m as usize], e, p);
            let next_hi = if star { m } else { m - 1 };
            let inner = rec(letters, idx + 1, next_hi, inv, p, star);
            total = (total + term * inner) % p;
        }
        total
    }
    let value = rec(letters, 0, p - 1, &inv, p, star);
    Ok(Residue::new(value, modulus))
}
