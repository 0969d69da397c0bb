//! Prime-range sweeps. A polynomial that is zero in the quotient ring of
//! residue families must evaluate to zero at all but finitely many primes;
//! the sweep checks every prime in a range and flags nonzero residues
//! above a weight-based threshold as violations.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::modp::eval::PrimeEvaluator;
use crate::modp::primes::primes_in_range;
use crate::poly::Polynomial;

/// One evaluated prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueEntry {
    pub p: u64,
    pub r: u64,
}

/// Result of sweeping one polynomial over a prime range.
///
/// `violations` lists primes above the threshold with nonzero residue;
/// `excluded` lists primes where a coefficient denominator vanished mod p
/// (the value is undefined there, not a violation). Field order matches
/// the JSON report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub expression: String,
    pub star: bool,
    pub weight: u64,
    pub threshold: u64,
    pub range: (u64, u64),
    pub residues: Vec<ResidueEntry>,
    pub excluded: Vec<u64>,
    pub violations: Vec<u64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Sub-threshold primes with nonzero residue (reported informationally).
    pub fn small_prime_exceptions(&self) -> Vec<ResidueEntry> {
        self.residues
            .iter()
            .copied()
            .filter(|e| e.p <= self.threshold && e.r != 0)
            .collect()
    }
}

/// Evaluates `poly` at every prime in `[lo, hi]` (in parallel; output
/// order is by prime regardless of scheduling). The default threshold is
/// `weight + 2`: the depth-1 vanishing argument needs `p > k + 1`, and
/// weight + 2 uniformly covers every letter a merge can produce.
pub fn sweep(
    poly: &Polynomial,
    expression: impl Into<String>,
    lo: u64,
    hi: u64,
    star: bool,
    threshold: Option<u64>,
) -> Result<SweepReport> {
    let primes = primes_in_range(lo, hi)?;
    let weight = poly.weight();
    let threshold = threshold.unwrap_or(weight + 2);

    let evaluated: Vec<(u64, Result<u64>)> = primes
        .par_iter()
        .map(|&p| {
            let mut ev = PrimeEvaluator::new(p);
            (p.get(), ev.eval_poly(poly, star).map(|r| r.value()))
        })
        .collect();

    let mut residues = Vec::with_capacity(evaluated.len());
    let mut excluded = Vec::new();
    let mut violations = Vec::new();
    for (p, outcome) in evaluated {
        match outcome {
            Ok(r) => {
                residues.push(ResidueEntry { p, r });
                if p > threshold && r != 0 {
                    violations.push(p);
                }
            }
            Err(Error::DenominatorDivisible { .. }) => excluded.push(p),
            Err(e) => return Err(e),
        }
    }

    Ok(SweepReport {
        expression: expression.into(),
        star,
        weight,
        threshold,
        range: (lo, hi),
        residues,
        excluded,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;
    use crate::word::Word;
    use num::rational::Ratio;
    use num::BigInt;

    #[test]
    fn single_letter_vanishes_above_threshold() {
        let poly = Polynomial::from_word(word![3]);
        let report = sweep(&poly, "z3", 2, 100, false, None).unwrap();
        assert_eq!(report.threshold, 5);
        assert!(report.passed());
        for e in &report.residues {
            if e.p > 5 {
                assert_eq!(e.r, 0, "residue at p = {}", e.p);
            }
        }
    }

    #[test]
    fn reversal_combination_is_zero_at_every_odd_prime() {
        // weight 4 is even, so z3 z1 - z1 z3 evaluates to zero per prime
        let poly = &Polynomial::from_word(word![3, 1]) - &Polynomial::from_word(word![1, 3]);
        let report = sweep(&poly, "z3 z1 - z1 z3", 3, 200, false, Some(2)).unwrap();
        assert!(report.residues.iter().all(|e| e.r == 0));
        assert!(report.passed());
    }

    #[test]
    fn zero_polynomial_sweeps_clean() {
        let report = sweep(&Polynomial::zero(), "0", 2, 50, true, None).unwrap();
        assert!(report.passed());
        assert!(report.residues.iter().all(|e| e.r == 0));
        assert_eq!(report.threshold, 2);
    }

    #[test]
    fn denominator_hits_are_excluded_not_violations() {
        let poly = Polynomial::from_term(word![3], Ratio::new(BigInt::from(1), BigInt::from(7)));
        let report = sweep(&poly, "1/7 z3", 2, 50, false, None).unwrap();
        assert_eq!(report.excluded, vec![7]);
        assert!(report.passed());
        assert!(report.residues.iter().all(|e| e.p != 7));
    }

    #[test]
    fn report_serializes_with_schema_field_names() {
        let report = sweep(&Polynomial::from_word(word![2]), "z2", 2, 10, false, None).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        for key in [
            "expression",
            "star",
            "weight",
            "threshold",
            "range",
            "residues",
            "excluded",
            "violations",
        ] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(json["range"], serde_json::json!([2, 10]));
        assert_eq!(json["residues"][0]["p"], serde_json::json!(2));
    }

    #[test]
    fn small_prime_exceptions_are_informational() {
        // zeta_3(4) = 2 != 0 but 3 <= threshold = 6
        let poly = Polynomial::from_word(Word::single(4).unwrap());
        let report = sweep(&poly, "z4", 2, 100, false, None).unwrap();
        assert!(report.passed());
        let small: Vec<u64> = report
            .small_prime_exceptions()
            .iter()
            .map(|e| e.p)
            .collect();
        assert!(small.contains(&3));
    }
}
