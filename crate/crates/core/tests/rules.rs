//! Rewrite rules and chain merges on longer random chains than the
//! exhaustive acceptance enumeration covers.

use interval_xag::formula::{AndOrChain, ChainOp};
use interval_xag::{ite_chain_merge, truth_table, xor_chain_merge, FormulaBuilder};
use proptest::prelude::*;

fn chain(first: u32, bits: &[bool]) -> AndOrChain {
    AndOrChain::consecutive(first, bits.iter().map(|&b| ChainOp::from_bit(b)).collect()).unwrap()
}

proptest! {
    #[test]
    fn xor_merge_is_xor(
        p in prop::collection::vec(any::<bool>(), 0..=12),
        q in prop::collection::vec(any::<bool>(), 0..=12),
    ) {
        prop_assume!(p != q);
        let (f1, f2) = (chain(1, &p), chain(1, &q));
        let f = xor_chain_merge(&f1, &f2).unwrap();
        let w = 13;
        let want = truth_table(&f1.to_formula(), w).unwrap()
            .xor(&truth_table(&f2.to_formula(), w).unwrap());
        prop_assert_eq!(truth_table(&f, w).unwrap(), want);
        let (l1, l2) = (p.len(), q.len());
        let cost = if l1 == l2 { l1 - 1 } else { l1.max(l2) };
        prop_assert_eq!(f.mult_cost(), cost);
    }

    #[test]
    fn ite_merge_is_ite(
        p in prop::collection::vec(any::<bool>(), 0..=11),
        q in prop::collection::vec(any::<bool>(), 0..=11),
    ) {
        let (f1, f2) = (chain(2, &p), chain(2, &q));
        let f = ite_chain_merge(1, &f2, &f1).unwrap();
        let w = 13;
        let mut b = FormulaBuilder::new();
        let x = b.var(1);
        let e = b.import(&f1.to_formula());
        let t = b.import(&f2.to_formula());
        let nt = b.not(t);
        let root = b.ite(x, nt, e);
        prop_assert_eq!(truth_table(&f, w).unwrap(), truth_table(&b.finish(root), w).unwrap());
        let (l1, l2) = (p.len(), q.len());
        let cost = if l1 == l2 { l1 } else { l1.max(l2) + 1 };
        prop_assert_eq!(f.mult_cost(), cost);
    }
}

#[test]
fn identical_chains_are_rejected() {
    let c = chain(1, &[true, false]);
    assert!(xor_chain_merge(&c, &c).is_err());
}
