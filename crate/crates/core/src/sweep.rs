//! Parameter sweeps over `(a, b)` pairs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::oracle::check_with_limit;
use crate::synth::IntervalSpec;

/// Widths up to this are enumerated exhaustively unless a sample is asked for.
pub const EXHAUSTIVE_MAX_N: u32 = 8;

pub const DEFAULT_SAMPLE: usize = 1000;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "a",
    "b",
    "ja",
    "jb",
    "predicted",
    "actual",
    "naive",
    "degree",
    "equivalent",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `0 < a < b < 2^n`
    Strict,
    /// `0 <= a < b <= 2^n`
    Extended,
}

impl Domain {
    fn bounds(self, n: u32) -> (u64, u64) {
        match self {
            Domain::Strict => (1, (1u64 << n) - 1),
            Domain::Extended => (0, 1u64 << n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub a: u64,
    pub b: u64,
    pub ja: u32,
    pub jb: u32,
    pub predicted: u32,
    pub actual: u32,
    pub naive: u32,
    pub degree: u32,
    pub equivalent: bool,
}

impl SweepRow {
    pub fn compute(spec: &IntervalSpec, max_n: u32) -> Result<SweepRow> {
        let r = check_with_limit(spec, max_n)?;
        Ok(SweepRow {
            n: r.n,
            a: r.a,
            b: r.b,
            ja: spec.ja(),
            jb: spec.jb(),
            predicted: r.predicted,
            actual: r.actual,
            naive: r.naive,
            degree: r.degree,
            equivalent: r.equivalent,
        })
    }

    pub fn is_violation(&self) -> bool {
        !self.equivalent || self.actual != self.predicted
    }

    /// Naive over actual cost, `None` when the circuit is free.
    pub fn savings_ratio(&self) -> Option<f64> {
        (self.actual > 0).then(|| self.naive as f64 / self.actual as f64)
    }

    fn fields(&self) -> [String; 10] {
        [
            self.n.to_string(),
            self.a.to_string(),
            self.b.to_string(),
            self.ja.to_string(),
            self.jb.to_string(),
            self.predicted.to_string(),
            self.actual.to_string(),
            self.naive.to_string(),
            self.degree.to_string(),
            self.equivalent.to_string(),
        ]
    }
}

/// The `(a, b)` pairs of a sweep, sorted. With `sample = None` widths up to
/// [`EXHAUSTIVE_MAX_N`] are enumerated and wider ones draw
/// [`DEFAULT_SAMPLE`] pairs. Sampling is uniform over distinct pairs and
/// reproducible for a given seed.
pub fn pairs(n: u32, domain: Domain, sample: Option<usize>, seed: u64) -> Vec<(u64, u64)> {
    let (lo, hi) = domain.bounds(n);
    let count = (hi - lo + 1) as u128;
    let total = count * count.saturating_sub(1) / 2;
    let k = match sample {
        Some(k) => k,
        None if n <= EXHAUSTIVE_MAX_N => usize::MAX,
        None => DEFAULT_SAMPLE,
    };
    if k as u128 >= total {
        return (lo..=hi)
            .flat_map(|a| (a + 1..=hi).map(move |b| (a, b)))
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    let mut chosen = BTreeSet::new();
    while chosen.len() < k {
        let x = rng.gen_range(lo..=hi);
        let y = rng.gen_range(lo..=hi);
        if x != y {
            chosen.insert((x.min(y), x.max(y)));
        }
    }
    chosen.into_iter().collect()
}

/// Evaluates every pair in parallel; rows come back in input order.
pub fn run(n: u32, pairs: &[(u64, u64)], max_n: u32) -> Result<Vec<SweepRow>> {
    pairs
        .par_iter()
        .map(|&(a, b)| SweepRow::compute(&IntervalSpec::new(n, a, b)?, max_n))
        .collect()
}

/// Rows as delimited text with the fixed header.
pub fn render(rows: &[SweepRow], sep: char) -> String {
    let mut out = CSV_HEADER.join(&sep.to_string());
    out.push('\n');
    for row in rows {
        writeln!(out, "{}", row.fields().join(&sep.to_string())).unwrap();
    }
    out
}

/// Largest naive/actual ratio among rows with a nonzero actual cost.
pub fn max_savings_ratio(rows: &[SweepRow]) -> Option<f64> {
    rows.iter()
        .filter_map(SweepRow::savings_ratio)
        .fold(None, |m, r| Some(m.map_or(r, |m: f64| m.max(r))))
}
