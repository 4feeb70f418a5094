//! Netlists over `{AND, XOR, INV}` and their Bristol Fashion / JSON forms.
//!
//! Input `x_k` is wire `k - 1`, so the most significant input bit is wire 0.
//! Gate outputs are numbered densely after the inputs, and the single output
//! is always the last wire, as Bristol Fashion evaluators expect.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::anf::TruthTable;
use crate::error::{Error, Result};
use crate::formula::{Formula, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateOp {
    And,
    Xor,
    Inv,
}

impl GateOp {
    pub fn arity(self) -> usize {
        match self {
            GateOp::Inv => 1,
            GateOp::And | GateOp::Xor => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GateOp::And => "AND",
            GateOp::Xor => "XOR",
            GateOp::Inv => "INV",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub op: GateOp,
    #[serde(rename = "in")]
    pub inputs: Vec<usize>,
    pub out: usize,
}

/// Single-output circuit in topological order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Netlist {
    pub n: usize,
    pub gates: Vec<Gate>,
    pub output: usize,
}

impl Netlist {
    pub fn num_wires(&self) -> usize {
        self.n + self.gates.len()
    }

    pub fn and_count(&self) -> usize {
        self.gates.iter().filter(|g| g.op == GateOp::And).count()
    }

    /// Checks arity, dense numbering and that every fanin is driven earlier.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::usage("netlist has no inputs"));
        }
        for (idx, g) in self.gates.iter().enumerate() {
            if g.inputs.len() != g.op.arity() {
                return Err(Error::usage(format!(
                    "gate {idx}: {} takes {} inputs, got {}",
                    g.op.name(),
                    g.op.arity(),
                    g.inputs.len()
                )));
            }
            if g.out != self.n + idx {
                return Err(Error::usage(format!(
                    "gate {idx}: output wire {} breaks dense numbering (expected {})",
                    g.out,
                    self.n + idx
                )));
            }
            if let Some(&w) = g.inputs.iter().find(|&&w| w >= g.out) {
                return Err(Error::DanglingWire { wire: w, gate: idx });
            }
        }
        if self.output >= self.num_wires() {
            return Err(Error::usage(format!(
                "output wire {} does not exist",
                self.output
            )));
        }
        Ok(())
    }

    pub fn eval(&self, inputs: &[bool]) -> Result<bool> {
        if inputs.len() != self.n {
            return Err(Error::usage(format!(
                "netlist has {} inputs, got {}",
                self.n,
                inputs.len()
            )));
        }
        let mut wires = inputs.to_vec();
        for g in &self.gates {
            let v = match g.op {
                GateOp::And => wires[g.inputs[0]] & wires[g.inputs[1]],
                GateOp::Xor => wires[g.inputs[0]] ^ wires[g.inputs[1]],
                GateOp::Inv => !wires[g.inputs[0]],
            };
            wires.push(v);
        }
        Ok(wires[self.output])
    }

    /// Table over all `2^n` inputs, same index convention as formulas.
    pub fn truth_table(&self) -> Result<TruthTable> {
        let n = self.n as u32;
        let mut wires = (1..=n)
            .map(|k| TruthTable::var(n, k))
            .collect::<Result<Vec<_>>>()?;
        for g in &self.gates {
            let t = match g.op {
                GateOp::And => wires[g.inputs[0]].and(&wires[g.inputs[1]]),
                GateOp::Xor => wires[g.inputs[0]].xor(&wires[g.inputs[1]]),
                GateOp::Inv => wires[g.inputs[0]].not(),
            };
            wires.push(t);
        }
        Ok(wires.swap_remove(self.output))
    }
}

struct Lowering {
    n: usize,
    gates: Vec<Gate>,
}

impl Lowering {
    fn gate(&mut self, op: GateOp, inputs: Vec<usize>) -> usize {
        let out = self.n + self.gates.len();
        self.gates.push(Gate { op, inputs, out });
        out
    }
}

/// Lowers a formula over `x1..xn`. OR becomes `INV(AND(INV a, INV b))`,
/// constants are derived from `x1 ^ x1`, so the AND count equals the
/// formula's multiplicative cost.
pub fn lower_to_netlist(f: &Formula, n: usize) -> Result<Netlist> {
    if n == 0 {
        return Err(Error::usage("a netlist needs at least one input"));
    }
    if f.max_var() as usize > n {
        return Err(Error::UnboundVariable {
            var: f.max_var(),
            width: n,
        });
    }
    let mut low = Lowering {
        n,
        gates: Vec::new(),
    };
    let mut wire = Vec::with_capacity(f.nodes().len());
    let mut zero = None;
    for &node in f.nodes() {
        let w = match node {
            Node::Var(i) => i as usize - 1,
            Node::Const(c) => {
                let z = *zero.get_or_insert_with(|| low.gate(GateOp::Xor, vec![0, 0]));
                if c {
                    low.gate(GateOp::Inv, vec![z])
                } else {
                    z
                }
            }
            Node::Not(a) => low.gate(GateOp::Inv, vec![wire[a.index()]]),
            Node::And(a, b) => low.gate(GateOp::And, vec![wire[a.index()], wire[b.index()]]),
            Node::Xor(a, b) => low.gate(GateOp::Xor, vec![wire[a.index()], wire[b.index()]]),
            Node::Or(a, b) => {
                let na = low.gate(GateOp::Inv, vec![wire[a.index()]]);
                let nb = low.gate(GateOp::Inv, vec![wire[b.index()]]);
                let g = low.gate(GateOp::And, vec![na, nb]);
                low.gate(GateOp::Inv, vec![g])
            }
        };
        wire.push(w);
    }
    let mut output = wire[f.root().index()];
    if output + 1 != n + low.gates.len() {
        // output must be the last wire; buffer it through two inverters
        let t = low.gate(GateOp::Inv, vec![output]);
        output = low.gate(GateOp::Inv, vec![t]);
    }
    Ok(Netlist {
        n,
        gates: low.gates,
        output,
    })
}

/// Bristol Fashion text, preceded by `#` comment lines naming the wire
/// convention.
pub fn to_bristol(nl: &Netlist) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "# x1 (most significant input bit) is wire 0, xn is wire {}",
        nl.n - 1
    )
    .unwrap();
    writeln!(s, "# {} AND gates", nl.and_count()).unwrap();
    writeln!(s, "{} {}", nl.gates.len(), nl.num_wires()).unwrap();
    writeln!(s, "1 {}", nl.n).unwrap();
    writeln!(s, "1 1").unwrap();
    writeln!(s).unwrap();
    for g in &nl.gates {
        write!(s, "{} 1", g.inputs.len()).unwrap();
        for w in &g.inputs {
            write!(s, " {w}").unwrap();
        }
        writeln!(s, " {} {}", g.out, g.op.name()).unwrap();
    }
    s
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(lineno, format!("expected an integer, got {tok:?}")))
        })
        .collect()
}

/// Parses Bristol Fashion text with one output wire. Input bundles are
/// concatenated in order; gate outputs may use any wire numbering as long as
/// each wire is driven once before it is read.
pub fn from_bristol(text: &str) -> Result<Netlist> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count(), format!("missing {what}")))
    };

    let (ln, header) = next("header")?;
    let header = numbers(header, ln)?;
    let [num_gates, num_wires] = header[..] else {
        return Err(Error::parse(ln, "header must be `<gates> <wires>`"));
    };

    let (ln, inputs) = next("input line")?;
    let inputs = numbers(inputs, ln)?;
    if inputs.is_empty() || inputs.len() != inputs[0] + 1 {
        return Err(Error::parse(ln, "input line must be `<count> <size>...`"));
    }
    let n: usize = inputs[1..].iter().sum();

    let (ln, outputs) = next("output line")?;
    if numbers(outputs, ln)? != [1, 1] {
        return Err(Error::parse(
            ln,
            "expected a single one-wire output (`1 1`)",
        ));
    }
    if n == 0 || num_wires < n + num_gates.min(1) {
        return Err(Error::parse(
            1,
            "wire count does not cover inputs and gates",
        ));
    }

    let mut gates = Vec::with_capacity(num_gates);
    let mut driven = vec![false; num_wires];
    driven[..n].iter_mut().for_each(|d| *d = true);
    let mut rename: HashMap<usize, usize> = (0..n).map(|w| (w, w)).collect();
    for idx in 0..num_gates {
        let (ln, line) = next("gate line")?;
        let mut toks: Vec<&str> = line.split_whitespace().collect();
        let name = toks
            .pop()
            .ok_or_else(|| Error::parse(ln, "empty gate line"))?;
        let op = match name {
            "AND" => GateOp::And,
            "XOR" => GateOp::Xor,
            "INV" | "NOT" => GateOp::Inv,
            other => return Err(Error::parse(ln, format!("unsupported gate {other:?}"))),
        };
        let nums = numbers(&toks.join(" "), ln)?;
        if nums.len() != 2 + op.arity() + 1 || nums[0] != op.arity() || nums[1] != 1 {
            return Err(Error::parse(ln, format!("malformed {name} gate")));
        }
        let out = nums[nums.len() - 1];
        if out >= num_wires {
            return Err(Error::parse(
                ln,
                format!("wire {out} exceeds wire count {num_wires}"),
            ));
        }
        if driven[out] {
            return Err(Error::parse(ln, format!("wire {out} is driven twice")));
        }
        let mut inputs = Vec::with_capacity(op.arity());
        for &w in &nums[2..2 + op.arity()] {
            match rename.get(&w) {
                Some(&r) if w < num_wires && driven[w] => inputs.push(r),
                _ => return Err(Error::DanglingWire { wire: w, gate: idx }),
            }
        }
        driven[out] = true;
        rename.insert(out, n + idx);
        gates.push(Gate {
            op,
            inputs,
            out: n + idx,
        });
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "trailing content after the last gate"));
    }
    // outputs are the last wire by convention
    let last = num_wires - 1;
    let output = *rename.get(&last).ok_or(Error::DanglingWire {
        wire: last,
        gate: num_gates,
    })?;
    Ok(Netlist { n, gates, output })
}

/// JSON netlist, gates in topological order.
pub fn to_json(nl: &Netlist) -> String {
    serde_json::to_string_pretty(nl).expect("netlists always serialize")
}

pub fn from_json(text: &str) -> Result<Netlist> {
    let nl: Netlist =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    nl.validate()?;
    Ok(nl)
}
