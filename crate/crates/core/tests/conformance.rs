//! The single-pass synthesizer and the rule-based merge must agree on every
//! spec, both in function and in gate count.

use interval_xag::oracle::interval_oracle_table;
use interval_xag::synth::fused::interval_formula_fused;
use interval_xag::{interval_formula, predicted_mc, truth_table, IntervalSpec};

#[test]
fn fused_matches_rule_based_exhaustively() {
    for n in 1..=8u32 {
        let top = 1u64 << n;
        for a in 1..top {
            for b in a + 1..top {
                let spec = IntervalSpec::new(n, a, b).unwrap();
                let merged = interval_formula(&spec);
                let fused = interval_formula_fused(&spec).unwrap();
                let oracle = interval_oracle_table(&spec).unwrap();
                assert_eq!(truth_table(&fused, n).unwrap(), oracle, "{spec}");
                assert_eq!(fused.mult_cost(), merged.mult_cost(), "{spec}");
                assert_eq!(fused.mult_cost() as u32, predicted_mc(&spec), "{spec}");
            }
        }
    }
}

#[test]
fn fused_rejects_extended_domain() {
    for (n, a, b) in [(3, 0, 5), (3, 2, 8), (3, 0, 8)] {
        let spec = IntervalSpec::new(n, a, b).unwrap();
        assert!(interval_formula_fused(&spec).is_err(), "{spec}");
    }
}
