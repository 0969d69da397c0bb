use thiserror::Error;

/// Errors raised by the algebra, the evaluators and the element builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Word letters must be positive integers.
    #[error("word letters must be >= 1")]
    ZeroLetter,

    /// A product would create words deeper than the configured cap.
    #[error("combined depth {depth} exceeds cap {cap}")]
    DepthLimitExceeded { depth: usize, cap: usize },

    /// A combinatorial expansion was asked for above its size cap.
    #[error("{what} size {n} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    /// The operation is undefined on the empty word.
    #[error("operation rejects the empty word")]
    EmptyWord,

    /// A modulus failed the primality check.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// A modulus fell outside the supported range.
    #[error("prime {0} out of supported range (2 <= p < 2^31)")]
    PrimeOutOfRange(u64),

    /// A prime range was malformed or exceeded the sieve cap.
    #[error("invalid prime range [{lo}, {hi}] (need 2 <= lo <= hi <= {cap})")]
    BadPrimeRange { lo: u64, hi: u64, cap: u64 },

    /// A suite needed primes to sample but the range holds none.
    #[error("no primes in [{lo}, {hi}]")]
    EmptyPrimeRange { lo: u64, hi: u64 },

    /// A coefficient cannot be reduced mod p because its denominator is
    /// divisible by p; the prime must be excluded from the sweep.
    #[error("coefficient denominator divisible by p = {p}")]
    DenominatorDivisible { p: u64 },

    /// Index triples pair equally many a's and b's.
    #[error("index lists have mismatched lengths ({a} a's vs {b} b's)")]
    MismatchedLists { a: usize, b: usize },

    /// Index triples require odd a/b entries.
    #[error("a/b entries must be odd, got {0}")]
    OddLetterRequired(u64),

    /// Index triples require even c entries.
    #[error("c entries must be even, got {0}")]
    EvenLetterRequired(u64),

    /// Index triples must carry at least one letter.
    #[error("index triple must satisfy (m, n) != (0, 0)")]
    EmptyIndexTriple,

    /// Unknown verification suite name.
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
