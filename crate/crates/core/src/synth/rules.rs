//! Rewrite identities used to merge two AND/OR chains.
//!
//! Each function builds the right-hand side of one identity inside a
//! builder. The operands are arbitrary node ids, so the same functions serve
//! the synthesizer and the soundness tests, which compare each right-hand
//! side against the literal left-hand side.
//!
//! Notation: `ite(c, t, e) = (c & t) ^ (!c & e)`. The merge targets
//! `ite(xi, !f2, f1)` where `f1 = xj op1 g1` and `f2 = xj op2 g2`.

use crate::formula::{ChainOp, FormulaBuilder, NodeId};

/// Terminal shapes of `ite(xi, !f2, f1)` where one chain is the bare `xj`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IteTerminal {
    /// `ite(xi, !xj, xj) = xi ^ xj`
    Same,
    /// `ite(xi, !xj, xj & f) = (xi ^ xj) & (xi | f)`
    ElseAnd,
    /// `ite(xi, !xj, xj | f) = (xi ^ xj) | (!xi & f)`
    ElseOr,
    /// `ite(xi, !(xj & f), xj) = xi ^ (xj & (!xi | f))`
    ThenAnd,
    /// `ite(xi, !(xj | f), xj) = xi ^ (xj | (xi & f))`
    ThenOr,
}

impl IteTerminal {
    pub const ALL: [IteTerminal; 5] = [
        IteTerminal::Same,
        IteTerminal::ElseAnd,
        IteTerminal::ElseOr,
        IteTerminal::ThenAnd,
        IteTerminal::ThenOr,
    ];
}

/// `ite(xi, !xj, xj) = xi ^ xj`.
pub fn ite_same(b: &mut FormulaBuilder, xi: NodeId, xj: NodeId) -> NodeId {
    b.xor(xi, xj)
}

/// One of the four terminal cases with a remaining chain `f`.
///
/// # Panics
/// On [`IteTerminal::Same`], which has no remainder; use [`ite_same`].
pub fn ite_terminal(
    b: &mut FormulaBuilder,
    case: IteTerminal,
    xi: NodeId,
    xj: NodeId,
    f: NodeId,
) -> NodeId {
    match case {
        IteTerminal::Same => panic!("the Same terminal has no remainder"),
        IteTerminal::ElseAnd => {
            let d = b.xor(xi, xj);
            let g = b.or(xi, f);
            b.and(d, g)
        }
        IteTerminal::ElseOr => {
            let d = b.xor(xi, xj);
            let nx = b.not(xi);
            let g = b.and(nx, f);
            b.or(d, g)
        }
        // The longer chain sits under the negation: xi re-inverts xj and
        // gates the remainder in.
        IteTerminal::ThenAnd => {
            let nx = b.not(xi);
            let g = b.or(nx, f);
            let h = b.and(xj, g);
            b.xor(xi, h)
        }
        IteTerminal::ThenOr => {
            let g = b.and(xi, f);
            let h = b.or(xj, g);
            b.xor(xi, h)
        }
    }
}

/// The terminal forms as the listed identities state them for the cases
/// where the negated chain is longer:
///
/// `ite(xi, !(xj & f), xj) = (xi ^ xj) | (xi & !f)` and
/// `ite(xi, !(xj | f), xj) = (xi ^ xj) & (!xi | !f)`.
///
/// Same cost and function as the [`IteTerminal::ThenAnd`] and
/// [`IteTerminal::ThenOr`] forms of [`ite_terminal`].
pub fn ite_terminal_negated(
    b: &mut FormulaBuilder,
    then_op: ChainOp,
    xi: NodeId,
    xj: NodeId,
    f: NodeId,
) -> NodeId {
    let d = b.xor(xi, xj);
    let nf = b.not(f);
    match then_op {
        ChainOp::And => {
            let g = b.and(xi, nf);
            b.or(d, g)
        }
        ChainOp::Or => {
            let nx = b.not(xi);
            let g = b.or(nx, nf);
            b.and(d, g)
        }
    }
}

/// Non-terminal step, given `inner = ite(xi, !g2, g1)` for the chain tails.
///
/// Differing operators: `(xi ^ xj) op1 inner`.
/// Equal operators: `xi ^ (xj op (xi ^ inner))`.
pub fn ite_step(
    b: &mut FormulaBuilder,
    then_op: ChainOp,
    else_op: ChainOp,
    xi: NodeId,
    xj: NodeId,
    inner: NodeId,
) -> NodeId {
    if then_op == else_op {
        let t = b.xor(xi, inner);
        let u = b.chain_op(else_op, xj, t);
        b.xor(xi, u)
    } else {
        let d = b.xor(xi, xj);
        b.chain_op(else_op, d, inner)
    }
}

/// `x ^ (x & f) = x & !f` and `x ^ (x | f) = !x & f`.
pub fn xor_exhausted(b: &mut FormulaBuilder, op: ChainOp, x: NodeId, f: NodeId) -> NodeId {
    match op {
        ChainOp::And => {
            let nf = b.not(f);
            b.and(x, nf)
        }
        ChainOp::Or => {
            let nx = b.not(x);
            b.and(nx, f)
        }
    }
}

/// Shared leading operator, given `inner = f1 ^ f2`:
/// `(x & f1) ^ (x & f2) = x & inner` and `(x | f1) ^ (x | f2) = !x & inner`.
pub fn xor_common(b: &mut FormulaBuilder, op: ChainOp, x: NodeId, inner: NodeId) -> NodeId {
    let lit = b.literal(x, op == ChainOp::And);
    b.and(lit, inner)
}
