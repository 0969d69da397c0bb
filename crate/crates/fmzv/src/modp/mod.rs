//! Mod-p evaluation: truncated multiple harmonic sums `zeta_p` /
//! `zeta_p^star` for words, linear extension to polynomials, and prime
//! sweeps that operationalize "zero for all but finitely many primes".

mod eval;
mod primes;
mod sweep;

pub use eval::{mod_inverse_table, zeta_bruteforce, PrimeEvaluator, Residue};
pub use primes::{is_prime, primes_in_range, PrimeModulus, SIEVE_CAP};
pub use sweep::{sweep, ResidueEntry, SweepReport};
