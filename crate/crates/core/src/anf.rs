//! Packed truth tables, algebraic normal forms and algebraic degree.
//!
//! Table entry `v` holds `f` at the assignment where `x_k` is bit `n - k` of
//! `v`. With that convention the input integer `x = (x1 ... xn)_2` is the
//! table index itself.

use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Formula, Node};

/// Hard limit on table width.
pub const MAX_TABLE_WIDTH: u32 = 24;

/// Entries of variable `i` (index bit `i`, `i < 6`) inside one 64-bit word.
const IN_WORD_PROJECTIONS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    width: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zeros(width: u32) -> Result<Self> {
        if width > MAX_TABLE_WIDTH {
            return Err(Error::WidthLimit {
                width,
                limit: MAX_TABLE_WIDTH,
            });
        }
        let words = if width <= 6 { 1 } else { 1usize << (width - 6) };
        Ok(TruthTable {
            width,
            words: vec![0; words],
        })
    }

    pub fn ones(width: u32) -> Result<Self> {
        Ok(Self::zeros(width)?.not())
    }

    /// Table of `x_k`, `1 <= k <= width`.
    pub fn var(width: u32, k: u32) -> Result<Self> {
        if k == 0 || k > width {
            return Err(Error::UnboundVariable {
                var: k,
                width: width as usize,
            });
        }
        let mut t = Self::zeros(width)?;
        let bit = width - k;
        if bit < 6 {
            let p = IN_WORD_PROJECTIONS[bit as usize];
            t.words.iter_mut().for_each(|w| *w = p);
        } else {
            let stride = 1usize << (bit - 6);
            for (i, w) in t.words.iter_mut().enumerate() {
                if i & stride != 0 {
                    *w = !0;
                }
            }
        }
        Ok(t.masked())
    }

    /// Builds a table from a predicate on the index.
    pub fn from_fn(width: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        let mut t = Self::zeros(width)?;
        for v in 0..t.len() {
            if f(v) {
                t.set(v, true);
            }
        }
        Ok(t)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Number of entries, `2^width`.
    pub fn len(&self) -> u64 {
        1u64 << self.width
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, v: u64) -> bool {
        assert!(v < self.len(), "index {v} out of range");
        self.words[(v >> 6) as usize] >> (v & 63) & 1 == 1
    }

    pub fn set(&mut self, v: u64, value: bool) {
        assert!(v < self.len(), "index {v} out of range");
        let w = &mut self.words[(v >> 6) as usize];
        if value {
            *w |= 1 << (v & 63);
        } else {
            *w &= !(1 << (v & 63));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Indices of set entries in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(((i as u64) << 6) | b)
            })
        })
    }

    /// Smallest index where the two tables disagree.
    pub fn first_difference(&self, other: &TruthTable) -> Option<u64> {
        assert_eq!(self.width, other.width, "table widths differ");
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| ((i as u64) << 6) | (a ^ b).trailing_zeros() as u64)
    }

    fn masked(mut self) -> Self {
        if self.width < 6 {
            self.words[0] &= (1u64 << (1u32 << self.width)) - 1;
        }
        self
    }

    fn zip_with(&self, other: &TruthTable, f: impl Fn(u64, u64) -> u64) -> TruthTable {
        assert_eq!(self.width, other.width, "table widths differ");
        TruthTable {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn and(&self, other: &TruthTable) -> TruthTable {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &TruthTable) -> TruthTable {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn xor(&self, other: &TruthTable) -> TruthTable {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn not(&self) -> TruthTable {
        TruthTable {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        }
        .masked()
    }
}

impl fmt::Display for TruthTable {
    /// Entries in index order, `0`/`1` per entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.len() {
            f.write_str(if self.get(v) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// In-place binary Möbius transform over GF(2). Self-inverse.
pub fn mobius_transform(t: &mut TruthTable) {
    for i in 0..t.width.min(6) {
        let hi = IN_WORD_PROJECTIONS[i as usize];
        let shift = 1u32 << i;
        for w in t.words.iter_mut() {
            *w ^= (*w & !hi) << shift;
        }
    }
    for i in 6..t.width {
        let stride = 1usize << (i - 6);
        for idx in 0..t.words.len() {
            if idx & stride != 0 {
                t.words[idx] ^= t.words[idx ^ stride];
            }
        }
    }
}

/// Truth table of `f` over `n` inputs, evaluated bit-parallel node by node.
pub fn truth_table(f: &Formula, n: u32) -> Result<TruthTable> {
    if n > MAX_TABLE_WIDTH {
        return Err(Error::WidthLimit {
            width: n,
            limit: MAX_TABLE_WIDTH,
        });
    }
    let mut tables: Vec<TruthTable> = Vec::with_capacity(f.nodes().len());
    for &node in f.nodes() {
        let t = match node {
            Node::Var(i) => TruthTable::var(n, i)?,
            Node::Const(false) => TruthTable::zeros(n)?,
            Node::Const(true) => TruthTable::ones(n)?,
            Node::Not(a) => tables[a.index()].not(),
            Node::And(a, b) => tables[a.index()].and(&tables[b.index()]),
            Node::Or(a, b) => tables[a.index()].or(&tables[b.index()]),
            Node::Xor(a, b) => tables[a.index()].xor(&tables[b.index()]),
        };
        tables.push(t);
    }
    Ok(tables.swap_remove(f.root().index()))
}

impl Formula {
    pub fn truth_table(&self, n: u32) -> Result<TruthTable> {
        truth_table(self, n)
    }
}

/// A monomial as a set of variables; bit `k - 1` marks `x_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u32);

impl Monomial {
    pub fn new(vars: &[u32]) -> Monomial {
        Monomial(vars.iter().fold(0, |m, &k| m | 1 << (k - 1)))
    }

    pub fn vars(self) -> Vec<u32> {
        (1..=32).filter(|k| self.0 >> (k - 1) & 1 == 1).collect()
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    fn from_index(v: u64, width: u32) -> Monomial {
        let mut m = 0;
        for k in 1..=width {
            if v >> (width - k) & 1 == 1 {
                m |= 1 << (k - 1);
            }
        }
        Monomial(m)
    }

    fn to_index(self, width: u32) -> Option<u64> {
        if width < 32 && self.0 >> width != 0 {
            return None;
        }
        Some((1..=width).fold(0u64, |v, k| {
            v | ((self.0 >> (k - 1) & 1) as u64) << (width - k)
        }))
    }
}

/// Algebraic normal form, stored as the packed coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Anf {
    coefficients: TruthTable,
}

impl Anf {
    pub fn width(&self) -> u32 {
        self.coefficients.width
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        let w = self.width();
        self.coefficients
            .ones_iter()
            .map(|v| Monomial::from_index(v, w))
            .collect()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.to_index(self.width())
            .is_some_and(|v| self.coefficients.get(v))
    }

    pub fn coefficients(&self) -> &TruthTable {
        &self.coefficients
    }

    /// Size of the largest monomial; 0 for both constants.
    pub fn degree(&self) -> u32 {
        self.coefficients
            .ones_iter()
            .map(|v| v.count_ones())
            .max()
            .unwrap_or(0)
    }

    /// `max(degree - 1, 0)`, a lower bound on the number of AND gates.
    pub fn degree_lower_bound(&self) -> u32 {
        self.degree().saturating_sub(1)
    }

    /// Back to the truth table (the transform is an involution).
    pub fn to_truth_table(&self) -> TruthTable {
        let mut t = self.coefficients.clone();
        mobius_transform(&mut t);
        t
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut monomials = self.monomials();
        if monomials.is_empty() {
            return f.write_str("0");
        }
        monomials.sort_by_key(|m| (m.degree(), m.vars()));
        let terms: Vec<String> = monomials
            .iter()
            .map(|m| match m.degree() {
                0 => "1".to_string(),
                _ => m
                    .vars()
                    .iter()
                    .map(|k| format!("x{k}"))
                    .collect::<Vec<_>>()
                    .join("&"),
            })
            .collect();
        f.write_str(&terms.join(" ^ "))
    }
}

pub fn anf_of(tt: &TruthTable) -> Anf {
    let mut coefficients = tt.clone();
    mobius_transform(&mut coefficients);
    Anf { coefficients }
}

pub fn degree(a: &Anf) -> u32 {
    a.degree()
}

pub fn degree_lower_bound(a: &Anf) -> u32 {
    a.degree_lower_bound()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{AndOrChain, ChainOp};
    use proptest::prelude::*;

    fn parse(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    fn entries(t: &TruthTable) -> Vec<bool> {
        (0..t.len()).map(|v| t.get(v)).collect()
    }

    /// XOR of monomial products, evaluated directly.
    fn eval_anf(a: &Anf, v: u64) -> bool {
        let w = a.width();
        a.monomials()
            .iter()
            .filter(|m| m.vars().iter().all(|&k| v >> (w - k) & 1 == 1))
            .count()
            % 2
            == 1
    }

    #[test]
    fn table_examples() {
        let t = truth_table(&parse("(x1 | x2)"), 2).unwrap();
        assert_eq!(entries(&t), [false, true, true, true]);
        let t = truth_table(&Formula::constant(true), 1).unwrap();
        assert_eq!(entries(&t), [true, true]);
        let t = truth_table(&parse("(x1 & (x2 | x3))"), 3).unwrap();
        let oracle: Vec<bool> = (0..8u64).map(|x| 5 <= x).collect();
        assert_eq!(entries(&t), oracle);
    }

    #[test]
    fn table_width_guard() {
        assert_eq!(
            truth_table(&parse("x1"), 25),
            Err(Error::WidthLimit {
                width: 25,
                limit: 24
            })
        );
        assert!(truth_table(&parse("x3"), 2).is_err());
    }

    #[test]
    fn var_tables_match_index_convention() {
        for n in 1..=9u32 {
            for k in 1..=n {
                let t = TruthTable::var(n, k).unwrap();
                for v in 0..t.len() {
                    assert_eq!(t.get(v), v >> (n - k) & 1 == 1, "n={n} k={k} v={v}");
                }
            }
        }
    }

    #[test]
    fn anf_examples() {
        let a = anf_of(&truth_table(&parse("(x1 | x2)"), 2).unwrap());
        let mut ms = a.monomials();
        ms.sort();
        let mut want = vec![
            Monomial::new(&[1]),
            Monomial::new(&[2]),
            Monomial::new(&[1, 2]),
        ];
        want.sort();
        assert_eq!(ms, want);
        assert_eq!(a.degree(), 2);
        assert_eq!(a.to_string(), "x1 ^ x2 ^ x1&x2");

        let a = anf_of(&TruthTable::zeros(3).unwrap());
        assert!(a.monomials().is_empty());
        assert_eq!(a.degree(), 0);
        assert_eq!(a.degree_lower_bound(), 0);

        let a = anf_of(&truth_table(&parse("(x1 ^ x2)"), 2).unwrap());
        assert_eq!(a.to_string(), "x1 ^ x2");

        let a = anf_of(&TruthTable::ones(2).unwrap());
        assert_eq!(a.monomials(), vec![Monomial::new(&[])]);
        assert_eq!(degree(&a), 0);
    }

    #[test]
    fn lower_bound_of_small_interval() {
        let t = TruthTable::from_fn(3, |x| (2..4).contains(&x)).unwrap();
        let a = anf_of(&t);
        assert_eq!(a.degree(), 2);
        assert_eq!(degree_lower_bound(&a), 1);
    }

    #[test]
    fn chain_degree_is_length_plus_one() {
        for len in 0..=8usize {
            for pattern in 0..(1u32 << len) {
                let ops = (0..len)
                    .map(|k| ChainOp::from_bit(pattern >> k & 1 == 1))
                    .collect();
                let c = AndOrChain::consecutive(1, ops).unwrap();
                let t = truth_table(&c.to_formula(), len as u32 + 1).unwrap();
                assert_eq!(anf_of(&t).degree() as usize, len + 1);
            }
        }
    }

    #[test]
    fn distinct_equal_length_chains_share_top_monomial() {
        for len in 1..=7usize {
            let m = len as u32 + 1;
            let full = Monomial::new(&(1..=m).collect::<Vec<_>>());
            let anfs: Vec<Anf> = (0..(1u32 << len))
                .map(|p| {
                    let ops = (0..len)
                        .map(|k| ChainOp::from_bit(p >> k & 1 == 1))
                        .collect();
                    let f = AndOrChain::consecutive(1, ops).unwrap().to_formula();
                    anf_of(&truth_table(&f, m).unwrap())
                })
                .collect();
            for (i, a1) in anfs.iter().enumerate() {
                assert!(a1.contains(full));
                for a2 in &anfs[i + 1..] {
                    let diff = anf_of(&a1.to_truth_table().xor(&a2.to_truth_table()));
                    assert!(!diff.contains(full));
                    assert!(diff.monomials().iter().any(|mono| mono.degree() == m - 1));
                }
            }
        }
    }

    #[test]
    fn wordwise_and_in_word_transforms_agree_with_direct_definition() {
        // coefficient of I = XOR of f over all assignments below I
        let t = TruthTable::from_fn(8, |v| (v * 2654435761) >> 7 & 1 == 1).unwrap();
        let a = anf_of(&t);
        for v in 0..t.len() {
            let mut c = false;
            let mut s = v;
            loop {
                c ^= t.get(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & v;
            }
            assert_eq!(a.coefficients().get(v), c, "coefficient {v}");
        }
    }

    proptest! {
        #[test]
        fn mobius_is_an_involution(width in 0u32..=12, seed in any::<u64>()) {
            let t = TruthTable::from_fn(width, |v| (v ^ seed).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 63 == 1).unwrap();
            let mut u = t.clone();
            mobius_transform(&mut u);
            mobius_transform(&mut u);
            prop_assert_eq!(u, t);
        }

        #[test]
        fn anf_evaluation_reproduces_table(width in 1u32..=10, seed in any::<u64>()) {
            let t = TruthTable::from_fn(width, |v| (v ^ seed).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 60 & 1 == 1).unwrap();
            let a = anf_of(&t);
            for v in 0..t.len() {
                prop_assert_eq!(eval_anf(&a, v), t.get(v));
            }
        }

        #[test]
        fn first_difference_is_smallest(width in 0u32..=10, x in any::<u64>()) {
            let t = TruthTable::zeros(width).unwrap();
            let v = x % t.len();
            let mut u = t.clone();
            u.set(v, true);
            if v + 1 < t.len() {
                u.set(t.len() - 1, true);
            }
            prop_assert_eq!(t.first_difference(&u), Some(v));
            prop_assert_eq!(t.first_difference(&t), None);
        }
    }
}
