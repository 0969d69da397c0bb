//! Named verification suites: randomized per-prime identity checks,
//! exhaustive symbolic identity grids, and vanishing sweeps for the
//! symmetrized elements. Every suite is deterministic given its seed and
//! reports a reproducible counterexample on failure.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::elements::{
    balanced_partitions, bowman_bradley_sum, collapsed_symmetrization, partition_element,
    symmetrized_element, IndexTriple,
};
use crate::error::Result;
use crate::modp::{primes_in_range, sweep, PrimeEvaluator, PrimeModulus, SweepReport};
use crate::poly::Polynomial;
use crate::products::{collapse, factorial, Algebra};
use crate::word::Word;

/// Stable suite identifiers exposed by the CLI.
pub const SUITE_NAMES: [&str; 11] = [
    "stuffle-hom",
    "starbar-hom",
    "d-duality",
    "reversal",
    "sha-vanish",
    "semi-reversal",
    "partition-lemma",
    "matching-identity",
    "stuffle-partition",
    "bowman-bradley",
    "main-theorem",
];

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub params: serde_json::Value,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// Minimal reproduction payload for a failing check.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub expression: String,
    pub prime: Option<u64>,
    pub residue: Option<u64>,
    pub detail: String,
}

impl SuiteResult {
    fn pass(suite: &str, params: serde_json::Value) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            params,
            pass: true,
            counterexample: None,
        }
    }

    fn fail(suite: &str, params: serde_json::Value, cx: Counterexample) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            params,
            pass: false,
            counterexample: Some(cx),
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, min_depth: usize, max_depth: usize, max_letter: u64) -> Word {
    let depth = rng.gen_range(min_depth..=max_depth);
    let letters: Vec<u64> = (0..depth).map(|_| rng.gen_range(1..=max_letter)).collect();
    Word::from_raw(letters)
}

fn eval_word(p: PrimeModulus, w: &Word, star: bool) -> u64 {
    PrimeEvaluator::new(p).zeta_variant(w, star).value()
}

fn eval_poly(p: PrimeModulus, poly: &Polynomial, star: bool) -> Result<u64> {
    Ok(PrimeEvaluator::new(p).eval_poly(poly, star)?.value())
}

/// Per-prime law `Z_p(u st v) = Z_p(u) Z_p(v)` on random word pairs.
pub fn stuffle_hom_suite(
    alg: &Algebra,
    samples: usize,
    lo: u64,
    hi: u64,
    seed: u64,
) -> Result<SuiteResult> {
    harmonic_hom_suite(alg, samples, lo, hi, seed, false)
}

/// Per-prime law for the signed harmonic product and the star sums.
pub fn starbar_hom_suite(
    alg: &Algebra,
    samples: usize,
    lo: u64,
    hi: u64,
    seed: u64,
) -> Result<SuiteResult> {
    harmonic_hom_suite(alg, samples, lo, hi, seed, true)
}

fn sample_pool(lo: u64, hi: u64) -> Result<Vec<PrimeModulus>> {
    let primes = primes_in_range(lo, hi)?;
    if primes.is_empty() {
        return Err(crate::error::Error::EmptyPrimeRange { lo, hi });
    }
    Ok(primes)
}

fn harmonic_hom_suite(
    alg: &Algebra,
    samples: usize,
    lo: u64,
    hi: u64,
    seed: u64,
    star: bool,
) -> Result<SuiteResult> {
    let name = if star { "starbar-hom" } else { "stuffle-hom" };
    let params = json!({"samples": samples, "range": [lo, hi], "seed": seed});
    let primes = sample_pool(lo, hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = random_word(&mut rng, 0, 3, 4);
        let v = random_word(&mut rng, 0, 3, 4);
        let p = primes[rng.gen_range(0..primes.len())];
        let pu = Polynomial::from_word(u.clone());
        let pv = Polynomial::from_word(v.clone());
        let prod = if star {
            alg.star_bar(&pu, &pv)?
        } else {
            alg.star(&pu, &pv)?
        };
        let lhs = eval_poly(p, &prod, star)?;
        let rhs = eval_word(p, &u, star) * eval_word(p, &v, star) % p.get();
        if lhs != rhs {
            let op = if star { "sb" } else { "st" };
            return Ok(SuiteResult::fail(
                name,
                params,
                Counterexample {
                    expression: format!("{u} {op} {v}"),
                    prime: Some(p.get()),
                    residue: Some(lhs),
                    detail: format!("product evaluates to {lhs} but factors give {rhs}"),
                },
            ));
        }
    }
    Ok(SuiteResult::pass(name, params))
}

/// Per-prime law `zeta*_p(w) = Z_p(d(w))` on random words.
pub fn d_duality_suite(samples: usize, lo: u64, hi: u64, seed: u64) -> Result<SuiteResult> {
    let params = json!({"samples": samples, "range": [lo, hi], "seed": seed});
    let primes = sample_pool(lo, hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let w = random_word(&mut rng, 0, 3, 4);
        let p = primes[rng.gen_range(0..primes.len())];
        let lhs = eval_word(p, &w, true);
        let rhs = eval_poly(p, &collapse(&Polynomial::from_word(w.clone())), false)?;
        if lhs != rhs {
            return Ok(SuiteResult::fail(
                "d-duality",
                params,
                Counterexample {
                    expression: format!("d({w})"),
                    prime: Some(p.get()),
                    residue: Some(rhs),
                    detail: format!(
                        "star evaluation gives {lhs}, collapsed evaluation gives {rhs}"
                    ),
                },
            ));
        }
    }
    Ok(SuiteResult::pass("d-duality", params))
}

/// Reversal sign law `zeta_p(reverse w) = (-1)^weight zeta_p(w)` at odd
/// primes, in both variants.
pub fn reversal_suite(samples: usize, lo: u64, hi: u64, seed: u64) -> Result<SuiteResult> {
    let params = json!({"samples": samples, "range": [lo, hi], "seed": seed});
    let primes = sample_pool(lo.max(3), hi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let w = random_word(&mut rng, 1, 3, 4);
        let p = primes[rng.gen_range(0..primes.len())];
        for star in [false, true] {
            let fwd = eval_word(p, &w, star);
            let rev = eval_word(p, &w.reversed(), star);
            let expect = if w.weight().is_multiple_of(2) {
                fwd
            } else {
                (p.get() - fwd) % p.get()
            };
            if rev != expect {
                return Ok(SuiteResult::fail(
                    "reversal",
                    params,
                    Counterexample {
                        expression: w.reversed().to_string(),
                        prime: Some(p.get()),
                        residue: Some(rev),
                        detail: format!(
                            "reversed word gives {rev}, sign law predicts {expect} (star = {star})"
                        ),
                    },
                ));
            }
        }
    }
    Ok(SuiteResult::pass("reversal", params))
}

fn letter_lists(len: usize, max_letter: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|base| {
                (1..=max_letter).map(move |k| {
                    let mut next = base.clone();
                    next.push(k);
                    next
                })
            })
            .collect();
    }
    out
}

fn sha_chain_text(letters: &[u64]) -> String {
    letters
        .iter()
        .map(|k| format!("z{k}"))
        .collect::<Vec<_>>()
        .join(" sh ")
}

/// Sweeps every shuffle product of single letters (lists of length up to
/// `max_n`) and demands zero residues above the weight threshold.
pub fn sha_vanish_suite(
    alg: &Algebra,
    max_n: usize,
    max_letter: u64,
    lo: u64,
    hi: u64,
) -> Result<SuiteResult> {
    let params = json!({"max_n": max_n, "max_letter": max_letter, "range": [lo, hi]});
    for n in 1..=max_n {
        for letters in letter_lists(n, max_letter) {
            let singles: Vec<Polynomial> = letters
                .iter()
                .map(|&k| Polynomial::from_word(Word::from_raw(vec![k])))
                .collect();
            let poly = alg.sha_all(&singles)?;
            let expression = sha_chain_text(&letters);
            let report = sweep(&poly, expression.clone(), lo, hi, false, None)?;
            if let Some(&p) = report.violations.first() {
                let r = report.residues.iter().find(|e| e.p == p).map(|e| e.r);
                return Ok(SuiteResult::fail(
                    "sha-vanish",
                    params,
                    Counterexample {
                        expression,
                        prime: Some(p),
                        residue: r,
                        detail: "nonzero residue above threshold".to_string(),
                    },
                ));
            }
        }
    }
    Ok(SuiteResult::pass("sha-vanish", params))
}

/// Exhaustive grid for the alternating collapsed-prefix identity: the sum
/// must vanish symbolically for every word in the grid.
pub fn semi_reversal_suite(
    alg: &Algebra,
    max_depth: usize,
    max_letter: u64,
) -> Result<SuiteResult> {
    let params = json!({"max_depth": max_depth, "max_letter": max_letter});
    for depth in 1..=max_depth {
        for letters in letter_lists(depth, max_letter) {
            let w = Word::from_raw(letters);
            let sum = alg.semi_reversal_sum(&w)?;
            if !sum.is_zero() {
                return Ok(SuiteResult::fail(
                    "semi-reversal",
                    params,
                    Counterexample {
                        expression: w.to_string(),
                        prime: None,
                        residue: None,
                        detail: format!("alternating sum is {sum}, expected 0"),
                    },
                ));
            }
        }
    }
    Ok(SuiteResult::pass("semi-reversal", params))
}

/// Symbolic partition expansion of the collapsed symmetrization: the sum
/// of the partition elements must equal the collapsed symmetrized word.
pub fn partition_lemma_suite(alg: &Algebra, a: &[u64], b: &[u64]) -> Result<SuiteResult> {
    let params = json!({"a": a, "b": b});
    let mut lhs = Polynomial::zero();
    for pi in balanced_partitions(a, b)? {
        lhs += &partition_element(alg, &pi)?;
    }
    let rhs = collapsed_symmetrization(a, b);
    if lhs != rhs {
        return Ok(SuiteResult::fail(
            "partition-lemma",
            params,
            Counterexample {
                expression: (&lhs - &rhs).to_string(),
                prime: None,
                residue: None,
                detail: "partition expansion differs from collapsed symmetrization".to_string(),
            },
        ));
    }
    Ok(SuiteResult::pass("partition-lemma", params))
}

/// Exhaustive grids plus random samples for the matching expansion
/// against the harmonic product it must reproduce.
pub fn matching_identity_suite(
    alg: &Algebra,
    max_m: usize,
    max_n: usize,
    max_letter: u64,
    samples: usize,
    seed: u64,
) -> Result<SuiteResult> {
    let params = json!({
        "max_m": max_m, "max_n": max_n, "max_letter": max_letter,
        "samples": samples, "seed": seed
    });
    let mut cases: Vec<(Vec<u64>, Vec<u64>, Vec<u64>)> = Vec::new();
    for m in 1..=max_m {
        for a in letter_lists(m, max_letter) {
            for b in letter_lists(m, max_letter) {
                for n in 0..=max_n {
                    for c in letter_lists(n, max_letter) {
                        cases.push((a.clone(), b.clone(), c));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(1..=max_m);
        let n = rng.gen_range(0..=max_n);
        let rand_list = |rng: &mut ChaCha8Rng, len: usize| -> Vec<u64> {
            (0..len).map(|_| rng.gen_range(1..=9)).collect()
        };
        let a = rand_list(&mut rng, m);
        let b = rand_list(&mut rng, m);
        let c = rand_list(&mut rng, n);
        cases.push((a, b, c));
    }

    for (a, b, c) in cases {
        let got = alg.matching_expand(&a, &b, &c)?;
        let mut interleaved = Vec::with_capacity(2 * a.len());
        for i in 0..a.len() {
            interleaved.push(a[i]);
            interleaved.push(b[i]);
        }
        let singles: Vec<Polynomial> = c
            .iter()
            .map(|&k| Polynomial::from_word(Word::from_raw(vec![k])))
            .collect();
        let shuffled_c = alg.sha_all(&singles)?;
        let want = alg.star(
            &Polynomial::from_word(Word::from_raw(interleaved.clone())),
            &shuffled_c,
        )?;
        if got != want {
            let word_text = Word::from_raw(interleaved).to_string();
            let c_text = if c.is_empty() {
                "1".to_string()
            } else {
                sha_chain_text(&c)
            };
            return Ok(SuiteResult::fail(
                "matching-identity",
                params,
                Counterexample {
                    expression: format!("{word_text} st ({c_text})"),
                    prime: None,
                    residue: None,
                    detail: "matching expansion differs from harmonic product".to_string(),
                },
            ));
        }
    }
    Ok(SuiteResult::pass("matching-identity", params))
}

/// Exhaustive grids plus random samples for the set-partition expansion of
/// iterated harmonic products of single letters.
pub fn stuffle_partition_suite(
    alg: &Algebra,
    max_n: usize,
    max_letter: u64,
    samples: usize,
    seed: u64,
) -> Result<SuiteResult> {
    let params = json!({
        "max_n": max_n, "max_letter": max_letter, "samples": samples, "seed": seed
    });
    let mut cases: Vec<Vec<u64>> = Vec::new();
    for n in 1..=max_n {
        cases.extend(letter_lists(n, max_letter));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_n);
        cases.push((0..n).map(|_| rng.gen_range(1..=9)).collect());
    }

    for letters in cases {
        let got = alg.partition_expand(&letters)?;
        let singles: Vec<Polynomial> = letters
            .iter()
            .map(|&k| Polynomial::from_word(Word::from_raw(vec![k])))
            .collect();
        let want = alg.star_all(&singles)?;
        if got != want {
            let expr = letters
                .iter()
                .map(|k| format!("z{k}"))
                .collect::<Vec<_>>()
                .join(" st ");
            return Ok(SuiteResult::fail(
                "stuffle-partition",
                params,
                Counterexample {
                    expression: expr,
                    prime: None,
                    residue: None,
                    detail: "partition expansion differs from iterated harmonic product"
                        .to_string(),
                },
            ));
        }
    }
    Ok(SuiteResult::pass("stuffle-partition", params))
}

fn sweep_violation(report: &SweepReport, label: &str) -> Option<Counterexample> {
    report.violations.first().map(|&p| {
        let r = report.residues.iter().find(|e| e.p == p).map(|e| e.r);
        Counterexample {
            expression: report.expression.clone(),
            prime: Some(p),
            residue: r,
            detail: format!(
                "{label} sweep has nonzero residue above threshold {}",
                report.threshold
            ),
        }
    })
}

/// Bowman-Bradley insertion sum: checks the factorial reduction against
/// the symmetrized element symbolically, then sweeps the sum under both
/// evaluation maps.
#[allow(clippy::too_many_arguments)]
pub fn bowman_bradley_suite(
    alg: &Algebra,
    a: u64,
    b: u64,
    c: u64,
    m: usize,
    n: usize,
    lo: u64,
    hi: u64,
) -> Result<SuiteResult> {
    let params = json!({"a": a, "b": b, "c": c, "m": m, "n": n, "range": [lo, hi]});
    let sum = bowman_bradley_sum(a, b, c, m, n)?;

    let scaled = sum.scaled(&(factorial(m) * factorial(m) * factorial(n)));
    let triple = IndexTriple::repeated(a, b, c, m, n)?;
    let symmetrized = symmetrized_element(alg, &triple)?;
    if scaled != symmetrized {
        return Ok(SuiteResult::fail(
            "bowman-bradley",
            params,
            Counterexample {
                expression: (&scaled - &symmetrized).to_string(),
                prime: None,
                residue: None,
                detail: "factorial reduction does not match symmetrized element".to_string(),
            },
        ));
    }

    let label = format!("bb(a={a}, b={b}, c={c}, m={m}, n={n})");
    for star in [false, true] {
        let report = sweep(&sum, label.clone(), lo, hi, star, None)?;
        if let Some(cx) = sweep_violation(&report, if star { "star" } else { "plain" }) {
            return Ok(SuiteResult::fail("bowman-bradley", params, cx));
        }
    }
    Ok(SuiteResult::pass("bowman-bradley", params))
}

/// Sweeps the symmetrized element of an index triple under both
/// evaluation maps; passes iff no violations above the threshold.
pub fn main_theorem_suite(
    alg: &Algebra,
    triple: &IndexTriple,
    lo: u64,
    hi: u64,
) -> Result<SuiteResult> {
    let params = json!({
        "a": triple.a(), "b": triple.b(), "c": triple.c(), "range": [lo, hi]
    });
    let poly = symmetrized_element(alg, triple)?;
    let label = format!(
        "z[a={:?}; b={:?}; c={:?}]",
        triple.a(),
        triple.b(),
        triple.c()
    );
    for star in [false, true] {
        let report = sweep(&poly, label.clone(), lo, hi, star, None)?;
        if let Some(cx) = sweep_violation(&report, if star { "star" } else { "plain" }) {
            return Ok(SuiteResult::fail("main-theorem", params, cx));
        }
    }
    Ok(SuiteResult::pass("main-theorem", params))
}
