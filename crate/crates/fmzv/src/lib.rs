//! Exact word algebra for truncated multiple harmonic sums.
//!
//! The crate implements, with exact rational arithmetic throughout:
//!
//! - words and normalized polynomials over the letters `z_1, z_2, ...`
//!   ([`Word`], [`Polynomial`]);
//! - the shuffle product `sh`, the harmonic products `st` / `sb`, and the
//!   block-collapse map `d` ([`products`]);
//! - mod-p evaluation of the truncated sums, a brute-force oracle, and
//!   prime-range sweeps ([`modp`]);
//! - the symmetrized elements and balanced partitions behind the
//!   Bowman-Bradley-type vanishing results ([`elements`]);
//! - named verification suites ([`suites`]) and an expression language
//!   ([`parse`]).
//!
//! Polynomials and words are immutable values; everything here is safe to
//! share across threads, and sweeps parallelize across primes.

pub mod elements;
pub mod error;
pub mod modp;
pub mod parse;
pub mod poly;
pub mod products;
pub mod suites;
pub mod word;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use products::{collapse, Algebra};
pub use word::Word;

pub use num::BigRational;
