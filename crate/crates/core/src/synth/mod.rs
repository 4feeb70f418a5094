//! AND-minimal constructions for `[a <= x]` and `[a <= x < b]`.
//!
//! A comparison against a constant is an AND/OR chain whose operators are
//! the bits of the constant's odd part. An interval check is the XOR of two
//! such chains, which is merged operator by operator: shared leading
//! operators factor out, and at the first difference the XOR turns into an
//! if-then-else over the two chain tails that costs one gate per position.

pub mod fused;
pub mod rules;

use std::fmt;

use crate::bitconst::BitConstant;
use crate::error::{Error, Result};
use crate::formula::{emit_chain, AndOrChain, ChainOp, Formula, FormulaBuilder, NodeId};

use rules::IteTerminal;

/// The interval `[a, b)` over `n`-bit inputs, `0 <= a < b <= 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalSpec {
    n: u32,
    a: BitConstant,
    b: BitConstant,
}

impl IntervalSpec {
    pub fn new(n: u32, a: u64, b: u64) -> Result<Self> {
        let a_c = BitConstant::new(a, n)?;
        let b_c = BitConstant::new(b, n)?;
        if a >= b {
            return Err(Error::InvalidInterval { n, a, b });
        }
        Ok(IntervalSpec { n, a: a_c, b: b_c })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> BitConstant {
        self.a
    }

    pub fn b(&self) -> BitConstant {
        self.b
    }

    pub fn ja(&self) -> u32 {
        self.a.trailing_zeros()
    }

    pub fn jb(&self) -> u32 {
        self.b.trailing_zeros()
    }

    /// `0 < a < b < 2^n`: both bounds are proper nonzero constants.
    pub fn in_strict_domain(&self) -> bool {
        self.a.value() > 0 && !self.b.is_full()
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} <= x < {}] (n={})",
            self.a.value(),
            self.b.value(),
            self.n
        )
    }
}

/// Chain over `x_lo .. x_hi` whose operator at position `k` is AND when bit
/// `k` of `a` is set and OR otherwise.
pub fn comparison_chain(a: &BitConstant, lo: u32, hi: u32) -> Result<AndOrChain> {
    if lo == 0 || lo > hi || hi > a.width() {
        return Err(Error::usage(format!(
            "chain range [{lo}, {hi}] is empty or outside 1..={}",
            a.width()
        )));
    }
    if a.is_full() {
        return Err(Error::usage("2^n has no bit representation"));
    }
    let ops = (lo..hi)
        .map(|k| a.bit(k).map(ChainOp::from_bit))
        .collect::<Result<Vec<_>>>()?;
    AndOrChain::consecutive(lo, ops)
}

/// The chain computing `[a <= x]` after dropping trailing zeros:
/// `Const(true)` for `a = 0`, `Const(false)` for `a = 2^n`.
pub fn reduced_comparison_chain(a: &BitConstant) -> AndOrChain {
    match a.reduced() {
        None if a.value() == 0 => AndOrChain::Const(true),
        None => AndOrChain::Const(false),
        Some((odd, _)) => comparison_chain(&odd, 1, odd.width()).expect("odd part is in range"),
    }
}

/// `[a <= x]` over `a.width()`-bit inputs, with `n - j - 1` gates for
/// `a = k * 2^j`, `k` odd.
pub fn compare_synth(a: &BitConstant) -> Result<Formula> {
    if a.is_full() {
        return Err(Error::ValueOutOfRange {
            value: a.value(),
            width: a.width(),
        });
    }
    Ok(reduced_comparison_chain(a).to_formula())
}

/// Borrowed view of a non-constant chain.
#[derive(Clone, Copy)]
struct ChainRef<'a> {
    ops: &'a [ChainOp],
    vars: &'a [u32],
}

impl<'a> ChainRef<'a> {
    fn of(c: &'a AndOrChain) -> Self {
        ChainRef {
            ops: c.ops(),
            vars: c.vars(),
        }
    }

    fn head(&self) -> u32 {
        self.vars[0]
    }

    fn first_op(&self) -> Option<ChainOp> {
        self.ops.first().copied()
    }

    fn tail(&self) -> ChainRef<'a> {
        ChainRef {
            ops: &self.ops[1..],
            vars: &self.vars[1..],
        }
    }

    fn emit(&self, b: &mut FormulaBuilder) -> NodeId {
        emit_chain(b, self.ops, self.vars)
    }
}

fn check_prefix_related(f1: &AndOrChain, f2: &AndOrChain) -> Result<()> {
    let (short, long) = if f1.vars().len() <= f2.vars().len() {
        (f1.vars(), f2.vars())
    } else {
        (f2.vars(), f1.vars())
    };
    if long[..short.len()] != *short {
        return Err(Error::usage(
            "chains must share variable order, one variable list a prefix of the other",
        ));
    }
    Ok(())
}

/// `f1 ^ f2` for two distinct chains over a common variable prefix.
///
/// Uses `l - 1` gates when both chains have length `l`, and the longer
/// length otherwise.
pub fn xor_chain_merge(f1: &AndOrChain, f2: &AndOrChain) -> Result<Formula> {
    if f1 == f2 {
        return Err(Error::usage("merging identical chains yields constant 0"));
    }
    let mut b = FormulaBuilder::new();
    let root = match (f1, f2) {
        (AndOrChain::Const(c1), AndOrChain::Const(c2)) => b.constant(c1 ^ c2),
        (AndOrChain::Const(c), f) | (f, AndOrChain::Const(c)) => {
            let g = ChainRef::of(f).emit(&mut b);
            b.literal(g, !c)
        }
        _ => {
            check_prefix_related(f1, f2)?;
            emit_xor_merge(&mut b, ChainRef::of(f1), ChainRef::of(f2))
        }
    };
    Ok(b.finish(root))
}

fn emit_xor_merge(b: &mut FormulaBuilder, f1: ChainRef, f2: ChainRef) -> NodeId {
    debug_assert_eq!(f1.head(), f2.head());
    let x = b.var(f1.head());
    match (f1.first_op(), f2.first_op()) {
        (None, None) => unreachable!("distinct chains cannot both end here"),
        (None, Some(op)) => {
            let f = f2.tail().emit(b);
            rules::xor_exhausted(b, op, x, f)
        }
        (Some(op), None) => {
            let f = f1.tail().emit(b);
            rules::xor_exhausted(b, op, x, f)
        }
        (Some(o1), Some(o2)) if o1 == o2 => {
            let inner = emit_xor_merge(b, f1.tail(), f2.tail());
            rules::xor_common(b, o1, x, inner)
        }
        // (x | g1) ^ (x & g2) = ite(x, !g2, g1)
        (Some(ChainOp::Or), Some(ChainOp::And)) => emit_ite(b, x, f2.tail(), f1.tail()),
        (Some(ChainOp::And), Some(ChainOp::Or)) => emit_ite(b, x, f1.tail(), f2.tail()),
        _ => unreachable!(),
    }
}

/// `ite(x, !f2, f1)` for chains starting at the same variable, neither of
/// which contains `x`.
///
/// Uses `l` gates when both chains have length `l`, and one more than the
/// longer length otherwise.
pub fn ite_chain_merge(x: u32, f2: &AndOrChain, f1: &AndOrChain) -> Result<Formula> {
    if f1.is_const() || f2.is_const() {
        return Err(Error::usage("ite merging needs two variable chains"));
    }
    if x == 0 || f1.vars().contains(&x) || f2.vars().contains(&x) {
        return Err(Error::usage(format!(
            "selector x{x} must be a variable outside both chains"
        )));
    }
    check_prefix_related(f1, f2)?;
    let mut b = FormulaBuilder::new();
    let xi = b.var(x);
    let root = emit_ite(&mut b, xi, ChainRef::of(f2), ChainRef::of(f1));
    Ok(b.finish(root))
}

fn emit_ite(b: &mut FormulaBuilder, xi: NodeId, f2: ChainRef, f1: ChainRef) -> NodeId {
    debug_assert_eq!(f1.head(), f2.head());
    let xj = b.var(f1.head());
    match (f1.first_op(), f2.first_op()) {
        (None, None) => rules::ite_same(b, xi, xj),
        (Some(op), None) => {
            let case = match op {
                ChainOp::And => IteTerminal::ElseAnd,
                ChainOp::Or => IteTerminal::ElseOr,
            };
            let f = f1.tail().emit(b);
            rules::ite_terminal(b, case, xi, xj, f)
        }
        (None, Some(op)) => {
            let case = match op {
                ChainOp::And => IteTerminal::ThenAnd,
                ChainOp::Or => IteTerminal::ThenOr,
            };
            let f = f2.tail().emit(b);
            rules::ite_terminal(b, case, xi, xj, f)
        }
        (Some(else_op), Some(then_op)) => {
            let inner = emit_ite(b, xi, f2.tail(), f1.tail());
            rules::ite_step(b, then_op, else_op, xi, xj, inner)
        }
    }
}

/// `[a <= x < b]` with the optimal number of AND gates.
pub fn interval_formula(spec: &IntervalSpec) -> Formula {
    let fa = reduced_comparison_chain(&spec.a);
    let fb = reduced_comparison_chain(&spec.b);
    // a < b keeps the reduced chains distinct.
    assert_ne!(fa, fb, "reduced chains of {spec} coincide");
    xor_chain_merge(&fa, &fb).expect("reduced chains share the prefix x1..")
}

/// Two independent comparators joined by XOR, the cost baseline.
pub fn naive_interval(spec: &IntervalSpec) -> Formula {
    let mut b = FormulaBuilder::new();
    let root = match (spec.a.value() == 0, spec.b.is_full()) {
        (true, true) => b.constant(true),
        (true, false) => {
            let hi = b.import(&compare_synth(&spec.b).expect("b < 2^n"));
            b.not(hi)
        }
        (false, true) => b.import(&compare_synth(&spec.a).expect("a < 2^n")),
        (false, false) => {
            let lo = b.import(&compare_synth(&spec.a).expect("a < 2^n"));
            let hi = b.import(&compare_synth(&spec.b).expect("b < 2^n"));
            b.xor(lo, hi)
        }
    };
    b.finish(root)
}

/// Exact AND-gate count of `[a <= x < b]`:
/// `n - min(ja, jb) - 1` when `ja != jb`, otherwise `n - ja - 2`.
///
/// `a = 0` and `b = 2^n` fall out of the same formula through
/// `trailing_zeros(0) = trailing_zeros(2^n) = n`, except for the full
/// interval, which costs nothing.
pub fn predicted_mc(spec: &IntervalSpec) -> u32 {
    let (n, ja, jb) = (spec.n, spec.ja(), spec.jb());
    if spec.a.value() == 0 && spec.b.is_full() {
        0
    } else if ja != jb {
        n - ja.min(jb) - 1
    } else {
        n - ja - 2
    }
}

/// Gate count of a lone comparator `[c <= x]`.
pub fn comparator_cost(c: &BitConstant) -> u32 {
    match c.reduced() {
        Some((odd, _)) => odd.width() - 1,
        None => 0,
    }
}
