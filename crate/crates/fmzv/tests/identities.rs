//! Full-scale identity grids that sit between the fast unit tests and the
//! acceptance criteria.

use fmzv::elements::IndexTriple;
use fmzv::modp::sweep;
use fmzv::suites::{bowman_bradley_suite, main_theorem_suite, sha_vanish_suite};
use fmzv::{Algebra, Polynomial, Word};

/// Shuffle products of up to three single letters vanish above the weight
/// threshold at every prime up to 500.
#[test]
fn shuffle_products_vanish_at_scale() {
    let r = sha_vanish_suite(&Algebra::default(), 3, 4, 2, 500).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
}

/// Named sweep targets: the depth-2 symmetrized elements over the default
/// range, and the distinct-letter element used by the acceptance suite.
#[test]
fn symmetrized_element_sweeps() {
    let alg = Algebra::default();
    let cases = [
        (vec![3u64], vec![1u64], vec![], 500u64),
        (vec![1], vec![1], vec![], 500),
        (vec![3, 5], vec![1, 1], vec![2, 4], 300),
    ];
    for (a, b, c, hi) in cases {
        let t = IndexTriple::new(a.clone(), b.clone(), c.clone()).unwrap();
        let r = main_theorem_suite(&alg, &t, 2, hi).unwrap();
        assert!(r.pass, "a={a:?} b={b:?} c={c:?}: {:?}", r.counterexample);
    }
}

/// The repeated-letter specializations: `{c}^n` alone and `{a,b}^m` alone.
#[test]
fn repeated_letter_specializations_vanish() {
    let alg = Algebra::default();
    let r = bowman_bradley_suite(&alg, 3, 1, 2, 0, 3, 2, 500).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
    let r = bowman_bradley_suite(&alg, 3, 1, 2, 2, 0, 2, 300).unwrap();
    assert!(r.pass, "{:?}", r.counterexample);
}

/// The reversal combination with even weight is zero at every prime, not
/// just above the threshold.
#[test]
fn even_weight_reversal_difference_is_identically_zero() {
    let diff = &Polynomial::from_word(Word::new(vec![3, 1]).unwrap())
        - &Polynomial::from_word(Word::new(vec![1, 3]).unwrap());
    for star in [false, true] {
        let report = sweep(&diff, "z3 z1 - z1 z3", 2, 500, star, Some(0)).unwrap();
        assert!(
            report.violations.is_empty(),
            "star = {star}: {:?}",
            report.violations
        );
    }
}
