//! Primality checking and prime enumeration.

use std::fmt;

use crate::error::{Error, Result};

/// Largest sieve endpoint accepted by `primes_in_range`.
pub const SIEVE_CAP: u64 = 10_000_000;

const PRIME_LIMIT: u64 = 1 << 31;

/// A verified prime modulus `2 <= p < 2^31`.
///
/// The bound keeps every product of two residues inside `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..PRIME_LIMIT).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
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

/// Deterministic Miller-Rabin for `n < 3_215_031_751` (bases 2, 3, 5, 7).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[lo, hi]`, ascending. Requires `2 <= lo <= hi <= SIEVE_CAP`.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<PrimeModulus>> {
    if lo < 2 || lo > hi || hi > SIEVE_CAP {
        return Err(Error::BadPrimeRange {
            lo,
            hi,
            cap: SIEVE_CAP,
        });
    }
    let hi_us = hi as usize;
    let mut composite = vec![false; hi_us + 1];
    let mut primes = Vec::new();
    for q in 2..=hi_us {
        if composite[q] {
            continue;
        }
        if q as u64 >= lo {
            primes.push(PrimeModulus(q as u64));
        }
        let mut multiple = q * q;
        while multiple <= hi_us {
            composite[multiple] = true;
            multiple += q;
        }
    }
    Ok(primes)
}
