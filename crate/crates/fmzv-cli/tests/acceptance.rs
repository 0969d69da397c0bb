//! Acceptance suite. Each criterion is one test that prints a PASS line
//! on success (run with `--nocapture` to see them); a failed assertion
//! marks the criterion FAILED in the harness output.
//!
//! The identities checked here are exact, so every comparison is exact
//! equality — symbolic on polynomials, integer on residues.

use std::process::Command;
use std::time::Instant;

use fmzv::elements::{balanced_partitions, symmetrized_element, IndexTriple};
use fmzv::modp::{primes_in_range, sweep, zeta_bruteforce, PrimeEvaluator};
use fmzv::products::{collapse, factorial};
use fmzv::suites;
use fmzv::{Algebra, Polynomial, Word};

fn wp(letters: &[u64]) -> Polynomial {
    Polynomial::from_word(Word::new(letters.to_vec()).unwrap())
}

fn words_up_to(max_depth: usize, max_letter: u64) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Vec::<u64>::new()];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for base in &frontier {
            for k in 1..=max_letter {
                let mut letters = base.clone();
                letters.push(k);
                out.push(Word::new(letters.clone()).unwrap());
                next.push(letters);
            }
        }
        frontier = next;
    }
    out
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let words = words_up_to(3, 4);
    let primes = primes_in_range(2, 31).unwrap();
    let mut checked = 0usize;
    for &p in &primes {
        let mut ev = PrimeEvaluator::new(p);
        for w in &words {
            for star in [false, true] {
                let dp = ev.zeta_variant(w, star).value();
                let oracle = zeta_bruteforce(w, p, star).unwrap().value();
                assert_eq!(dp, oracle, "word {w}, p = {p}, star = {star}");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(checked, 2 * words.len() * primes.len());
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10 s");
    println!("acceptance 1 (oracle equivalence, {checked} checks in {elapsed:?}): PASS");
}

#[test]
fn criterion_2_worked_examples() {
    let alg = Algebra::default();
    let star = alg.star(&wp(&[2]), &wp(&[3])).unwrap();
    assert_eq!(star, &(&wp(&[2, 3]) + &wp(&[3, 2])) + &wp(&[5]));

    let star_bar = alg.star_bar(&wp(&[2]), &wp(&[3])).unwrap();
    assert_eq!(star_bar, &(&wp(&[2, 3]) + &wp(&[3, 2])) - &wp(&[5]));

    let collapsed = collapse(&wp(&[2, 3]));
    assert_eq!(collapsed, &wp(&[2, 3]) + &wp(&[5]));

    let sha = alg.sha(&wp(&[1]), &wp(&[2])).unwrap();
    assert_eq!(sha, &wp(&[1, 2]) + &wp(&[2, 1]));

    println!("acceptance 2 (worked product and collapse examples): PASS");
}

#[test]
fn criterion_3_per_prime_identities() {
    let alg = Algebra::default();
    let runs = [
        suites::stuffle_hom_suite(&alg, 200, 2, 97, 101).unwrap(),
        suites::starbar_hom_suite(&alg, 200, 2, 97, 102).unwrap(),
        suites::d_duality_suite(200, 2, 97, 103).unwrap(),
        suites::reversal_suite(200, 3, 97, 104).unwrap(),
    ];
    for r in &runs {
        assert!(r.pass, "suite {} failed: {:?}", r.suite, r.counterexample);
    }
    println!("acceptance 3 (200 randomized per-prime identity instances x 4 laws): PASS");
}

#[test]
fn criterion_4_symbolic_identity_suites() {
    let alg = Algebra::default();

    let start = Instant::now();
    let r = suites::semi_reversal_suite(&alg, 5, 4).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
    let t_semi = start.elapsed();
    assert!(t_semi.as_secs() < 30);

    let start = Instant::now();
    let r = suites::stuffle_partition_suite(&alg, 5, 3, 25, 105).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
    let t_stuffle = start.elapsed();
    assert!(t_stuffle.as_secs() < 30);

    let start = Instant::now();
    let r = suites::matching_identity_suite(&alg, 2, 3, 3, 25, 106).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
    let t_match = start.elapsed();
    assert!(t_match.as_secs() < 30);

    let start = Instant::now();
    for (a, b) in [
        (vec![3u64], vec![1u64]),
        (vec![7], vec![7]),
        (vec![3, 3], vec![1, 1]),
        (vec![1, 5], vec![3, 7]),
        (vec![3, 3, 3], vec![1, 1, 1]),
        (vec![1, 3, 5], vec![2, 4, 6]),
    ] {
        let r = suites::partition_lemma_suite(&alg, &a, &b).unwrap();
        assert!(r.pass, "a = {a:?}, b = {b:?}: {:?}", r.counterexample);
    }
    let t_part = start.elapsed();
    assert!(t_part.as_secs() < 30);

    println!(
        "acceptance 4 (symbolic suites: semi-reversal {t_semi:?}, partition expansion \
         {t_stuffle:?}, matching {t_match:?}, partition lemma {t_part:?}): PASS"
    );
}

#[test]
fn criterion_5_partition_cardinalities() {
    assert_eq!(balanced_partitions(&[3], &[1]).unwrap().len(), 2);
    assert_eq!(balanced_partitions(&[3, 3], &[1, 1]).unwrap().len(), 12);
    println!("acceptance 5 (balanced partition counts 2 and 12): PASS");
}

#[test]
fn criterion_6_vanishing_sweeps() {
    let alg = Algebra::default();
    let start = Instant::now();

    // depth-1 vanishing for k <= 10 over primes <= 10^4
    for k in 1..=10u64 {
        let report = sweep(&wp(&[k]), format!("z{k}"), 2, 10_000, false, None).unwrap();
        assert!(
            report.violations.is_empty(),
            "z{k} violations: {:?}",
            report.violations
        );
        let star = sweep(&wp(&[k]), format!("z{k}"), 2, 10_000, true, None).unwrap();
        assert!(star.violations.is_empty());
    }
    let t_depth1 = start.elapsed();

    // insertion sums over primes <= 500, both evaluation maps
    let start_bb = Instant::now();
    for (a, b, c) in [(3u64, 1u64, 2u64), (1, 1, 2), (3, 5, 4)] {
        for (m, n) in [(1usize, 0usize), (0, 1), (1, 1), (2, 0), (1, 2), (2, 1)] {
            let r = suites::bowman_bradley_suite(&alg, a, b, c, m, n, 2, 500).unwrap();
            assert!(
                r.pass,
                "a={a} b={b} c={c} m={m} n={n}: {:?}",
                r.counterexample
            );
        }
    }
    let t_bb = start_bb.elapsed();

    // distinct-letter symmetrized element over primes <= 300
    let start_main = Instant::now();
    let triple = IndexTriple::new(vec![3, 5], vec![1, 1], vec![2, 4]).unwrap();
    let r = suites::main_theorem_suite(&alg, &triple, 2, 300).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
    let t_main = start_main.elapsed();

    let total = start.elapsed();
    assert!(total.as_secs() < 120, "took {total:?}, budget 2 min");
    println!(
        "acceptance 6 (vanishing sweeps: depth-1 {t_depth1:?}, insertion sums {t_bb:?}, \
         symmetrized element {t_main:?}, total {total:?}): PASS"
    );
}

#[test]
fn criterion_7_factorial_reduction() {
    let alg = Algebra::default();
    for (a, b, c) in [(3u64, 1u64, 2u64), (1, 1, 2), (5, 3, 4)] {
        for m in 0..=3usize {
            for n in 0..=3usize {
                if m == 0 && n == 0 {
                    continue;
                }
                let mut pair_word = Vec::new();
                for _ in 0..m {
                    pair_word.push(a);
                    pair_word.push(b);
                }
                let pair_poly = Polynomial::from_word(Word::new(pair_word).unwrap());
                let c_poly = Polynomial::from_word(Word::new(vec![c; n]).unwrap());
                let shuffled = alg.sha(&pair_poly, &c_poly).unwrap();
                let lhs = shuffled.scaled(&(factorial(m) * factorial(m) * factorial(n)));

                let triple = IndexTriple::repeated(a, b, c, m, n).unwrap();
                let rhs = symmetrized_element(&alg, &triple).unwrap();
                assert_eq!(lhs, rhs, "a={a} b={b} c={c} m={m} n={n}");
            }
        }
    }
    println!("acceptance 7 (factorial reduction of repeated triples, m,n <= 3): PASS");
}

#[test]
fn criterion_8_determinism() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_fmzv"))
            .args(args)
            .env_remove("FMZV_JOBS")
            .output()
            .expect("binary runs")
    };

    let sweep_args = ["sweep", "z3 z1", "--range", "2:400", "--format", "json"];
    let first = run(&sweep_args);
    let second = run(&sweep_args);
    assert_eq!(
        first.stdout, second.stdout,
        "sweep reruns must be identical"
    );

    let jobs1 = run(&[
        "sweep", "z3 z1", "--range", "2:400", "--format", "json", "--jobs", "1",
    ]);
    let jobs4 = run(&[
        "sweep", "z3 z1", "--range", "2:400", "--format", "json", "--jobs", "4",
    ]);
    assert_eq!(first.stdout, jobs1.stdout, "--jobs 1 changed the report");
    assert_eq!(first.stdout, jobs4.stdout, "--jobs 4 changed the report");

    let verify_args = ["verify", "stuffle-hom", "--seed", "77", "--format", "json"];
    let v1 = run(&verify_args);
    let v2 = run(&verify_args);
    assert_eq!(
        v1.stdout, v2.stdout,
        "seeded verify reruns must be identical"
    );

    println!("acceptance 8 (byte-identical reports across reruns and --jobs): PASS");
}
