//! Brute-force ground truth for interval circuits.
//!
//! The reference table is built from the arithmetic predicate alone; nothing
//! here evaluates a synthesized formula to obtain expected values.

use std::fmt;

use serde::Serialize;

use crate::anf::{anf_of, truth_table, TruthTable};
use crate::error::{Error, Result};
use crate::synth::{interval_formula, naive_interval, predicted_mc, IntervalSpec};

/// Default limit on the width accepted by [`check`].
pub const DEFAULT_MAX_N: u32 = 16;

/// Table with entry `x` set iff `a <= x < b`.
pub fn interval_oracle_table(spec: &IntervalSpec) -> Result<TruthTable> {
    let mut t = TruthTable::zeros(spec.n())?;
    for x in spec.a().value()..spec.b().value() {
        t.set(x, true);
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: u32,
    pub a: u64,
    pub b: u64,
    pub equivalent: bool,
    /// Smallest `x` on which circuit and predicate disagree.
    pub counterexample: Option<u64>,
    pub actual: u32,
    pub predicted: u32,
    pub naive: u32,
    pub degree: u32,
}

impl OracleReport {
    /// Equivalent, and the gate count equals the prediction.
    pub fn passed(&self) -> bool {
        self.equivalent && self.actual == self.predicted
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} a={} b={} equivalent={} actual={} predicted={} naive={} degree={}",
            self.n,
            self.a,
            self.b,
            self.equivalent,
            self.actual,
            self.predicted,
            self.naive,
            self.degree
        )?;
        if let Some(x) = self.counterexample {
            write!(f, " counterexample={x}")?;
        }
        Ok(())
    }
}

pub fn check(spec: &IntervalSpec) -> Result<OracleReport> {
    check_with_limit(spec, DEFAULT_MAX_N)
}

pub fn check_with_limit(spec: &IntervalSpec, max_n: u32) -> Result<OracleReport> {
    if spec.n() > max_n {
        return Err(Error::WidthLimit {
            width: spec.n(),
            limit: max_n,
        });
    }
    let f = interval_formula(spec);
    let got = truth_table(&f, spec.n())?;
    let want = interval_oracle_table(spec)?;
    let counterexample = got.first_difference(&want);
    Ok(OracleReport {
        n: spec.n(),
        a: spec.a().value(),
        b: spec.b().value(),
        equivalent: counterexample.is_none(),
        counterexample,
        actual: f.mult_cost() as u32,
        predicted: predicted_mc(spec),
        naive: naive_interval(spec).mult_cost() as u32,
        degree: anf_of(&got).degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: u32, a: u64, b: u64) -> IntervalSpec {
        IntervalSpec::new(n, a, b).unwrap()
    }

    fn ones(t: &TruthTable) -> Vec<u64> {
        t.ones_iter().collect()
    }

    #[test]
    fn oracle_tables() {
        assert_eq!(
            ones(&interval_oracle_table(&spec(3, 2, 4)).unwrap()),
            [2, 3]
        );
        let full = interval_oracle_table(&spec(2, 0, 4)).unwrap();
        assert_eq!(full, TruthTable::ones(2).unwrap());
        assert_eq!(ones(&interval_oracle_table(&spec(3, 5, 6)).unwrap()), [5]);
    }

    #[test]
    fn oracle_matches_predicate_across_word_boundaries() {
        for (a, b) in [
            (0, 1024),
            (1, 1023),
            (63, 65),
            (64, 128),
            (70, 900),
            (5, 60),
        ] {
            let t = interval_oracle_table(&spec(10, a, b)).unwrap();
            for x in 0..1024 {
                assert_eq!(t.get(x), a <= x && x < b, "[{a},{b}) at {x}");
            }
        }
    }

    #[test]
    fn check_examples() {
        let r = check(&spec(3, 2, 4)).unwrap();
        assert!(r.equivalent && r.counterexample.is_none());
        // [2 <= x] costs 1, [4 <= x] = x1 costs nothing
        assert_eq!((r.actual, r.predicted, r.naive), (1, 1, 1));

        let r = check(&spec(3, 2, 6)).unwrap();
        assert!(r.equivalent);
        assert_eq!((r.actual, r.predicted, r.naive, r.degree), (0, 0, 2, 1));

        let r = check(&spec(4, 3, 9)).unwrap();
        assert!(r.passed());
        assert_eq!((r.actual, r.predicted, r.naive, r.degree), (2, 2, 6, 3));
    }

    #[test]
    fn check_width_guard() {
        assert_eq!(
            check(&spec(17, 1, 2)),
            Err(Error::WidthLimit {
                width: 17,
                limit: 16
            })
        );
        assert!(check_with_limit(&spec(17, 1, 2), 17).unwrap().passed());
    }
}
