//! AND-minimal XOR-AND-invert circuits for `[a <= x]` and `[a <= x < b]`.
//!
//! The constructions here use exactly as many AND gates as the algebraic
//! degree of the target function allows, which makes them optimal. The
//! [`oracle`] and [`anf`] modules check that claim by brute force: equality
//! with the arithmetic predicate, gate counting, and degree computation.
//!
//! ```
//! use interval_xag::{interval_formula, predicted_mc, IntervalSpec};
//!
//! let spec = IntervalSpec::new(8, 1, 255).unwrap();
//! let f = interval_formula(&spec);
//! assert_eq!(f.mult_cost(), 6);
//! assert_eq!(predicted_mc(&spec), 6);
//! ```

pub mod anf;
pub mod bitconst;
pub mod error;
pub mod export;
pub mod formula;
pub mod oracle;
pub mod sweep;
pub mod synth;

pub use anf::{anf_of, truth_table, Anf, Monomial, TruthTable};
pub use bitconst::BitConstant;
pub use error::{Error, Result};
pub use export::{from_bristol, from_json, lower_to_netlist, to_bristol, to_json, Netlist};
pub use formula::{AndOrChain, ChainOp, Formula, FormulaBuilder, Node, NodeId};
pub use oracle::{check, check_with_limit, interval_oracle_table, OracleReport};
pub use synth::{
    compare_synth, comparison_chain, interval_formula, ite_chain_merge, naive_interval,
    predicted_mc, xor_chain_merge, IntervalSpec,
};
