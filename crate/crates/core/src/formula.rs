//! Expression IR over `{VAR, CONST, NOT, AND, OR, XOR}`.
//!
//! A [`Formula`] is an immutable DAG stored in a flat node vector. Children
//! always precede their parents, so a single forward pass evaluates the
//! whole graph. Formulas are built with a [`FormulaBuilder`], which interns
//! variables and constants but never merges gates: two gates are shared
//! only when the construction reuses a node id on purpose.
//!
//! Variables are numbered from 1. Under the table convention used across the
//! crate, `x1` is the most significant bit of the input integer.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a node inside a formula or builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    Var(u32),
    Const(bool),
    Not(NodeId),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Xor(NodeId, NodeId),
}

impl Node {
    fn map_children(self, mut f: impl FnMut(NodeId) -> NodeId) -> Node {
        match self {
            Node::Var(_) | Node::Const(_) => self,
            Node::Not(a) => Node::Not(f(a)),
            Node::And(a, b) => Node::And(f(a), f(b)),
            Node::Or(a, b) => Node::Or(f(a), f(b)),
            Node::Xor(a, b) => Node::Xor(f(a), f(b)),
        }
    }

    fn children(self) -> impl Iterator<Item = NodeId> {
        let (a, b) = match self {
            Node::Var(_) | Node::Const(_) => (None, None),
            Node::Not(a) => (Some(a), None),
            Node::And(a, b) | Node::Or(a, b) | Node::Xor(a, b) => (Some(a), Some(b)),
        };
        a.into_iter().chain(b)
    }
}

/// Incremental constructor for formulas.
#[derive(Debug, Default, Clone)]
pub struct FormulaBuilder {
    nodes: Vec<Node>,
    leaves: HashMap<Node, NodeId>,
}

impl FormulaBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, node: Node) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(node);
        id
    }

    fn leaf(&mut self, node: Node) -> NodeId {
        if let Some(&id) = self.leaves.get(&node) {
            return id;
        }
        let id = self.push(node);
        self.leaves.insert(node, id);
        id
    }

    /// Variable `x_i`, `i >= 1`.
    pub fn var(&mut self, i: u32) -> NodeId {
        assert!(i >= 1, "variables are numbered from 1");
        self.leaf(Node::Var(i))
    }

    pub fn constant(&mut self, value: bool) -> NodeId {
        self.leaf(Node::Const(value))
    }

    pub fn not(&mut self, a: NodeId) -> NodeId {
        self.push(Node::Not(a))
    }

    pub fn and(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::And(a, b))
    }

    pub fn or(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::Or(a, b))
    }

    pub fn xor(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::Xor(a, b))
    }

    /// `(c & t) ^ (!c & e)`, written out with two AND gates.
    pub fn ite(&mut self, c: NodeId, t: NodeId, e: NodeId) -> NodeId {
        let hi = self.and(c, t);
        let nc = self.not(c);
        let lo = self.and(nc, e);
        self.xor(hi, lo)
    }

    /// `x^bit`: `x` when `bit` is set, `!x` otherwise.
    pub fn literal(&mut self, x: NodeId, bit: bool) -> NodeId {
        if bit {
            x
        } else {
            self.not(x)
        }
    }

    pub fn chain_op(&mut self, op: ChainOp, a: NodeId, b: NodeId) -> NodeId {
        match op {
            ChainOp::And => self.and(a, b),
            ChainOp::Or => self.or(a, b),
        }
    }

    /// Copies `f` into this builder and returns the id of its root.
    pub fn import(&mut self, f: &Formula) -> NodeId {
        let mut map = Vec::with_capacity(f.nodes.len());
        for &node in &f.nodes {
            let id = match node {
                Node::Var(_) | Node::Const(_) => self.leaf(node),
                _ => self.push(node.map_children(|c| map[c.index()])),
            };
            map.push(id);
        }
        map[f.root.index()]
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id.index()]
    }

    /// Freezes the graph below `root`. Unreachable nodes are dropped.
    pub fn finish(self, root: NodeId) -> Formula {
        let mut reachable = vec![false; self.nodes.len()];
        reachable[root.index()] = true;
        for i in (0..=root.index()).rev() {
            if reachable[i] {
                for c in self.nodes[i].children() {
                    reachable[c.index()] = true;
                }
            }
        }
        let mut remap = vec![NodeId(u32::MAX); self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, &node) in self.nodes.iter().enumerate() {
            if reachable[i] {
                remap[i] = NodeId(nodes.len() as u32);
                nodes.push(node.map_children(|c| remap[c.index()]));
            }
        }
        Formula {
            root: remap[root.index()],
            nodes,
        }
    }
}

/// Immutable Boolean formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    nodes: Vec<Node>,
    root: NodeId,
}

impl Formula {
    pub fn var(i: u32) -> Formula {
        let mut b = FormulaBuilder::new();
        let x = b.var(i);
        b.finish(x)
    }

    pub fn constant(value: bool) -> Formula {
        let mut b = FormulaBuilder::new();
        let c = b.constant(value);
        b.finish(c)
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id.index()]
    }

    /// All nodes in topological order (children first).
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Largest variable index referenced, 0 if there is none.
    pub fn max_var(&self) -> u32 {
        self.nodes
            .iter()
            .filter_map(|n| match n {
                Node::Var(i) => Some(*i),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Evaluates under `assignment`, where `assignment[i - 1]` is `x_i`.
    pub fn eval(&self, assignment: &[bool]) -> Result<bool> {
        let mut values: Vec<bool> = Vec::with_capacity(self.nodes.len());
        for &node in &self.nodes {
            let v = match node {
                Node::Var(i) => *assignment
                    .get(i as usize - 1)
                    .ok_or(Error::UnboundVariable {
                        var: i,
                        width: assignment.len(),
                    })?,
                Node::Const(c) => c,
                Node::Not(a) => !values[a.index()],
                Node::And(a, b) => values[a.index()] & values[b.index()],
                Node::Or(a, b) => values[a.index()] | values[b.index()],
                Node::Xor(a, b) => values[a.index()] ^ values[b.index()],
            };
            values.push(v);
        }
        Ok(values[self.root.index()])
    }

    /// Number of distinct AND and OR nodes reachable from the root. XOR and
    /// NOT are free.
    pub fn mult_cost(&self) -> usize {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![self.root];
        let mut cost = 0;
        while let Some(id) = stack.pop() {
            if std::mem::replace(&mut seen[id.index()], true) {
                continue;
            }
            let node = self.nodes[id.index()];
            if matches!(node, Node::And(..) | Node::Or(..)) {
                cost += 1;
            }
            stack.extend(node.children());
        }
        cost
    }

    /// Fully parenthesized rendering with `∧ ∨ ⊕ ¬`.
    pub fn to_unicode(&self) -> String {
        let mut out = String::new();
        self.render(self.root, &UNICODE, &mut out);
        out
    }

    fn render(&self, id: NodeId, sym: &Symbols, out: &mut String) {
        match self.node(id) {
            Node::Var(i) => {
                out.push('x');
                out.push_str(&i.to_string());
            }
            Node::Const(c) => out.push(if c { '1' } else { '0' }),
            Node::Not(a) => {
                out.push_str(sym.not);
                self.render(a, sym, out);
            }
            Node::And(a, b) => self.render_binary(a, sym.and, b, sym, out),
            Node::Or(a, b) => self.render_binary(a, sym.or, b, sym, out),
            Node::Xor(a, b) => self.render_binary(a, sym.xor, b, sym, out),
        }
    }

    fn render_binary(&self, a: NodeId, op: &str, b: NodeId, sym: &Symbols, out: &mut String) {
        out.push('(');
        self.render(a, sym, out);
        out.push(' ');
        out.push_str(op);
        out.push(' ');
        self.render(b, sym, out);
        out.push(')');
    }

    /// Parses the rendered grammar. Binary operators must be parenthesized;
    /// both the ASCII (`& | ^ !`) and Unicode (`∧ ∨ ⊕ ¬`) spellings are
    /// accepted.
    pub fn parse(text: &str) -> Result<Formula> {
        let mut p = Parser {
            chars: text.chars().collect(),
            pos: 0,
            builder: FormulaBuilder::new(),
        };
        let root = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("trailing input"));
        }
        Ok(p.builder.finish(root))
    }
}

struct Symbols {
    and: &'static str,
    or: &'static str,
    xor: &'static str,
    not: &'static str,
}

const ASCII: Symbols = Symbols {
    and: "&",
    or: "|",
    xor: "^",
    not: "!",
};

const UNICODE: Symbols = Symbols {
    and: "∧",
    or: "∨",
    xor: "⊕",
    not: "¬",
};

/// ASCII rendering, e.g. `(x1 ^ (x2 | x3))`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.render(self.root, &ASCII, &mut out);
        f.write_str(&out)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    builder: FormulaBuilder,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        Error::parse(1, format!("{msg} at column {}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<NodeId> {
        match self.peek() {
            Some('!' | '¬') => {
                self.pos += 1;
                let a = self.expr()?;
                Ok(self.builder.not(a))
            }
            Some('0') => {
                self.pos += 1;
                Ok(self.builder.constant(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(self.builder.constant(true))
            }
            Some('x') => {
                self.pos += 1;
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                match digits.parse::<u32>() {
                    Ok(i) if i >= 1 => Ok(self.builder.var(i)),
                    _ => Err(self.error("expected a variable index >= 1")),
                }
            }
            Some('(') => {
                self.pos += 1;
                let a = self.expr()?;
                let op = self.peek().ok_or_else(|| self.error("expected operator"))?;
                self.pos += 1;
                let b = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                match op {
                    '&' | '∧' => Ok(self.builder.and(a, b)),
                    '|' | '∨' => Ok(self.builder.or(a, b)),
                    '^' | '⊕' => Ok(self.builder.xor(a, b)),
                    _ => {
                        self.pos -= 1;
                        Err(self.error("unknown operator"))
                    }
                }
            }
            _ => Err(self.error("expected expression")),
        }
    }
}

/// Operator of an AND/OR chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainOp {
    And,
    Or,
}

impl ChainOp {
    /// AND for a set bit, OR for a clear one.
    pub fn from_bit(bit: bool) -> ChainOp {
        if bit {
            ChainOp::And
        } else {
            ChainOp::Or
        }
    }

    pub fn dual(self) -> ChainOp {
        match self {
            ChainOp::And => ChainOp::Or,
            ChainOp::Or => ChainOp::And,
        }
    }
}

/// Right-nested chain `v1 op1 (v2 op2 (... (v_{m-1} op_{m-1} v_m)))`, or a
/// constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AndOrChain {
    Const(bool),
    Chain { ops: Vec<ChainOp>, vars: Vec<u32> },
}

impl AndOrChain {
    /// Requires `vars.len() == ops.len() + 1` and distinct, nonzero variables.
    pub fn new(ops: Vec<ChainOp>, vars: Vec<u32>) -> Result<Self> {
        if vars.len() != ops.len() + 1 {
            return Err(Error::usage(format!(
                "a chain with {} operators needs {} variables, got {}",
                ops.len(),
                ops.len() + 1,
                vars.len()
            )));
        }
        let mut sorted = vars.clone();
        sorted.sort_unstable();
        if sorted[0] == 0 || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::usage("chain variables must be distinct and >= 1"));
        }
        Ok(AndOrChain::Chain { ops, vars })
    }

    /// Chain over the consecutive variables `x_first, x_first+1, ...`.
    pub fn consecutive(first: u32, ops: Vec<ChainOp>) -> Result<Self> {
        let vars = (first..first + ops.len() as u32 + 1).collect();
        Self::new(ops, vars)
    }

    pub fn single(var: u32) -> Result<Self> {
        Self::new(Vec::new(), vec![var])
    }

    pub fn ops(&self) -> &[ChainOp] {
        match self {
            AndOrChain::Const(_) => &[],
            AndOrChain::Chain { ops, .. } => ops,
        }
    }

    pub fn vars(&self) -> &[u32] {
        match self {
            AndOrChain::Const(_) => &[],
            AndOrChain::Chain { vars, .. } => vars,
        }
    }

    /// Number of operators; 0 for single variables and constants.
    pub fn length(&self) -> usize {
        self.ops().len()
    }

    pub fn is_const(&self) -> bool {
        matches!(self, AndOrChain::Const(_))
    }

    pub fn to_formula(&self) -> Formula {
        let mut b = FormulaBuilder::new();
        let root = match self {
            AndOrChain::Const(c) => b.constant(*c),
            AndOrChain::Chain { ops, vars } => emit_chain(&mut b, ops, vars),
        };
        b.finish(root)
    }
}

/// Builds the right-nested chain for `ops`/`vars` inside `b`.
pub(crate) fn emit_chain(b: &mut FormulaBuilder, ops: &[ChainOp], vars: &[u32]) -> NodeId {
    debug_assert_eq!(vars.len(), ops.len() + 1);
    let mut acc = b.var(vars[vars.len() - 1]);
    for (op, &v) in ops.iter().zip(vars).rev() {
        let x = b.var(v);
        acc = b.chain_op(*op, x, acc);
    }
    acc
}

pub fn chain_to_formula(c: &AndOrChain) -> Formula {
    c.to_formula()
}

pub fn chain_length(c: &AndOrChain) -> usize {
    c.length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert!(parse("(x1 | x2)").eval(&[false, true]).unwrap());
        assert!(parse("((x1 ^ x2) ^ (x1 & x2))")
            .eval(&[true, true])
            .unwrap());
        assert!(!Formula::constant(false).eval(&[true, false, true]).unwrap());
    }

    #[test]
    fn eval_unbound_variable() {
        assert_eq!(
            parse("(x1 & x3)").eval(&[true, true]),
            Err(Error::UnboundVariable { var: 3, width: 2 })
        );
    }

    #[test]
    fn gate_truth_tables() {
        let cases: [(&str, [bool; 4]); 3] = [
            ("(x1 & x2)", [false, false, false, true]),
            ("(x1 | x2)", [false, true, true, true]),
            ("(x1 ^ x2)", [false, true, true, false]),
        ];
        for (text, expected) in cases {
            let f = parse(text);
            for (v, &want) in expected.iter().enumerate() {
                let asg = [v & 2 != 0, v & 1 != 0];
                assert_eq!(f.eval(&asg).unwrap(), want, "{text} at {v}");
            }
        }
        let not = parse("!x1");
        assert!(not.eval(&[false]).unwrap());
        assert!(!not.eval(&[true]).unwrap());
    }

    #[test]
    fn cost_counts_and_or_only() {
        assert_eq!(parse("(x1 | x2)").mult_cost(), 1);
        assert_eq!(parse("(x1 ^ x2)").mult_cost(), 0);
        assert_eq!(parse("(x1 & (x2 | x3))").mult_cost(), 2);
        assert_eq!(parse("!(!x1 ^ 1)").mult_cost(), 0);
    }

    #[test]
    fn shared_gates_count_once() {
        let mut b = FormulaBuilder::new();
        let x1 = b.var(1);
        let x2 = b.var(2);
        let g = b.and(x1, x2);
        let root = b.xor(g, g);
        assert_eq!(b.finish(root).mult_cost(), 1);
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "(x1 ^ (x2 | x3))",
            "!(x1 & !x2)",
            "((x1 ^ x2) | ((x1 ^ x3) & (x1 ^ x4)))",
            "1",
            "x17",
        ] {
            assert_eq!(parse(text).to_string(), text);
        }
        assert_eq!(parse("(x1 ∧ ¬x2)").to_string(), "(x1 & !x2)");
        assert_eq!(parse("(x1 & !x2)").to_unicode(), "(x1 ∧ ¬x2)");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x0", "(x1 & x2", "x1 & x2", "(x1 ? x2)", "y"] {
            assert!(
                matches!(Formula::parse(bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn chain_rendering() {
        let single = AndOrChain::single(3).unwrap();
        assert_eq!(single.to_formula().to_string(), "x3");
        assert_eq!(single.length(), 0);

        let c = AndOrChain::consecutive(1, vec![ChainOp::And, ChainOp::Or]).unwrap();
        assert_eq!(chain_to_formula(&c).to_string(), "(x1 & (x2 | x3))");
        assert_eq!(chain_length(&c), 2);

        let c = AndOrChain::consecutive(1, vec![ChainOp::Or]).unwrap();
        assert_eq!(c.to_formula().to_string(), "(x1 | x2)");

        assert_eq!(AndOrChain::Const(true).to_formula().to_string(), "1");
        assert_eq!(AndOrChain::Const(true).length(), 0);
    }

    #[test]
    fn chain_validation() {
        assert!(AndOrChain::new(vec![ChainOp::And], vec![1]).is_err());
        assert!(AndOrChain::new(vec![ChainOp::And], vec![2, 2]).is_err());
        assert!(AndOrChain::new(vec![], vec![0]).is_err());
    }

    #[test]
    fn chain_cost_equals_length() {
        for len in 0..=8usize {
            for pattern in 0..(1u32 << len) {
                let ops = (0..len)
                    .map(|k| ChainOp::from_bit(pattern >> k & 1 == 1))
                    .collect();
                let c = AndOrChain::consecutive(1, ops).unwrap();
                assert_eq!(c.to_formula().mult_cost(), c.length());
            }
        }
    }

    #[test]
    fn import_preserves_structure() {
        let f = parse("(x2 ^ (x1 | !x2))");
        let mut b = FormulaBuilder::new();
        let x2 = b.var(2);
        let g = b.import(&f);
        let root = b.and(x2, g);
        assert_eq!(b.finish(root).to_string(), "(x2 & (x2 ^ (x1 | !x2)))");
    }

    #[test]
    fn finish_drops_unreachable_nodes() {
        let mut b = FormulaBuilder::new();
        let x1 = b.var(1);
        let x2 = b.var(2);
        let _unused = b.or(x1, x2);
        let root = b.not(x1);
        let f = b.finish(root);
        assert_eq!(f.nodes().len(), 2);
        assert_eq!(f.max_var(), 1);
    }
}
