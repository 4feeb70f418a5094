//! Single-pass interval synthesizer.
//!
//! Walks the bits of both bounds once, without materializing the two
//! comparison chains. It emits the same number of gates as
//! [`interval_formula`](super::interval_formula) and is kept as an
//! independent second route for conformance checks. Only defined on
//! `0 < a < b < 2^n`.

use crate::error::{Error, Result};
use crate::formula::{emit_chain, ChainOp, Formula, FormulaBuilder, NodeId};

use super::{comparison_chain, IntervalSpec};

/// A context with a single hole, filled from the inside out.
enum Frame {
    /// `x_i^bit & (.)`
    Literal { i: u32, bit: bool },
    /// `x_i ^ (x_j op (x_i ^ (.)))`
    Same { i: u32, j: u32, op: ChainOp },
    /// `(x_i ^ x_j) op (.)`
    Mixed { i: u32, j: u32, op: ChainOp },
}

pub fn interval_formula_fused(spec: &IntervalSpec) -> Result<Formula> {
    if !spec.in_strict_domain() {
        return Err(Error::usage(format!(
            "single-pass synthesis needs 0 < a < b < 2^n, got {spec}"
        )));
    }
    let (n, a, b) = (spec.n(), spec.a(), spec.b());
    let (ja, jb) = (spec.ja(), spec.jb());
    let abit = |k: u32| a.bit(k).expect("index within width");
    let bbit = |k: u32| b.bit(k).expect("index within width");
    let cutoff = n - ja.min(jb);
    let shorter_end = n - ja.max(jb);

    let mut fb = FormulaBuilder::new();
    let mut frames = Vec::new();

    // identical prefix
    let mut i = 1;
    while abit(i) == bbit(i) && i < shorter_end {
        frames.push(Frame::Literal { i, bit: abit(i) });
        i += 1;
    }

    let hole = if i == n - ja {
        let f = comparison_chain(&b, i + 1, cutoff)?;
        let f = emit_chain(&mut fb, f.ops(), f.vars());
        let xi = fb.var(i);
        let nf = fb.not(f);
        fb.and(xi, nf)
    } else if i == n - jb {
        let f = comparison_chain(&a, i + 1, cutoff)?;
        let f = emit_chain(&mut fb, f.ops(), f.vars());
        let xi = fb.var(i);
        let nx = fb.not(xi);
        fb.and(nx, f)
    } else {
        let mut j = i + 1;
        while j < shorter_end {
            let op = ChainOp::from_bit(abit(j));
            frames.push(if abit(j) == bbit(j) {
                Frame::Same { i, j, op }
            } else {
                Frame::Mixed { i, j, op }
            });
            j += 1;
        }
        let xi = fb.var(i);
        let xj = fb.var(j);
        let d = fb.xor(xi, xj);
        if ja != jb {
            let mut negop = if ja > jb { !bbit(j) } else { abit(j) };
            let op = ChainOp::from_bit(negop);
            let num = if ja > jb { b } else { a };
            let f = comparison_chain(&num, j + 1, cutoff)?;
            let f = emit_chain(&mut fb, f.ops(), f.vars());
            if ja > jb {
                negop = !negop;
            }
            let lit = fb.literal(xi, negop);
            let g = fb.literal(f, ja < jb);
            let inner = fb.chain_op(op.dual(), lit, g);
            fb.chain_op(op, d, inner)
        } else {
            d
        }
    };

    let root = frames
        .iter()
        .rev()
        .fold(hole, |acc, frame| wrap(&mut fb, frame, acc));
    Ok(fb.finish(root))
}

fn wrap(fb: &mut FormulaBuilder, frame: &Frame, hole: NodeId) -> NodeId {
    match *frame {
        Frame::Literal { i, bit } => {
            let x = fb.var(i);
            let lit = fb.literal(x, bit);
            fb.and(lit, hole)
        }
        Frame::Same { i, j, op } => {
            let xi = fb.var(i);
            let xj = fb.var(j);
            let t = fb.xor(xi, hole);
            let u = fb.chain_op(op, xj, t);
            fb.xor(xi, u)
        }
        Frame::Mixed { i, j, op } => {
            let xi = fb.var(i);
            let xj = fb.var(j);
            let d = fb.xor(xi, xj);
            fb.chain_op(op, d, hole)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anf::{truth_table, TruthTable};

    #[test]
    fn rejects_extended_domain() {
        assert!(interval_formula_fused(&IntervalSpec::new(3, 0, 4).unwrap()).is_err());
        assert!(interval_formula_fused(&IntervalSpec::new(3, 2, 8).unwrap()).is_err());
    }

    #[test]
    fn small_examples() {
        let f = interval_formula_fused(&IntervalSpec::new(3, 2, 6).unwrap()).unwrap();
        assert_eq!(f.to_string(), "(x1 ^ x2)");
        let f = interval_formula_fused(&IntervalSpec::new(3, 2, 4).unwrap()).unwrap();
        assert_eq!(f.to_string(), "(!x1 & x2)");
        let f = interval_formula_fused(&IntervalSpec::new(3, 5, 6).unwrap()).unwrap();
        assert_eq!(f.mult_cost(), 2);
        assert_eq!(
            truth_table(&f, 3).unwrap(),
            TruthTable::from_fn(3, |x| x == 5).unwrap()
        );
    }
}
