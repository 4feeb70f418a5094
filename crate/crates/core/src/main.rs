use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use interval_xag::anf::{anf_of, truth_table, MAX_TABLE_WIDTH};
use interval_xag::export::{lower_to_netlist, to_bristol, to_json};
use interval_xag::oracle::{check_with_limit, DEFAULT_MAX_N};
use interval_xag::sweep::{self, Domain};
use interval_xag::synth::{comparator_cost, interval_formula, naive_interval, predicted_mc};
use interval_xag::{Error, IntervalSpec};

const MAX_N_ENV: &str = "INTERVAL_XAG_MAX_N";

#[derive(Parser)]
#[command(
    name = "interval-xag",
    version,
    about = "AND-minimal circuits for [a <= x] and [a <= x < b]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit and write it out
    Synth {
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value_t = CircuitFormat::Expr)]
        format: CircuitFormat,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the circuit against brute force and the predicted gate count
    Verify {
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Algebraic degree of the function and the AND-gate lower bound it implies
    Degree {
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Print predicted, actual, naive and single-comparator gate counts
    Cost {
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Sweep (a, b) pairs for one width and emit a table
    Sweep {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Number of random pairs (default: all pairs up to n=8, else 1000)
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include a = 0 and b = 2^n
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Args)]
struct Bounds {
    /// Input width in bits
    #[arg(long)]
    n: u32,
    /// Inclusive lower bound (decimal, 0x hex or 0b binary)
    #[arg(long, value_parser = parse_constant)]
    a: u64,
    /// Exclusive upper bound; omit for the comparison [a <= x]
    #[arg(long, value_parser = parse_constant)]
    b: Option<u64>,
}

impl Bounds {
    fn spec(&self) -> Result<IntervalSpec, Error> {
        if self.n == 0 || self.n > interval_xag::bitconst::MAX_WIDTH {
            return Err(Error::InvalidWidth(self.n));
        }
        IntervalSpec::new(self.n, self.a, self.b.unwrap_or(1u64 << self.n))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CircuitFormat {
    Expr,
    Bristol,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Tsv,
}

fn parse_constant(s: &str) -> Result<u64, String> {
    let s = s.replace('_', "");
    let parsed = if let Some(h) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u64::from_str_radix(h, 16)
    } else if let Some(b) = s.strip_prefix("0b").or_else(|| s.strip_prefix("0B")) {
        u64::from_str_radix(b, 2)
    } else {
        s.parse()
    };
    parsed.map_err(|e| format!("invalid constant {s:?}: {e}"))
}

enum Failure {
    /// Invalid arguments or guard violations.
    Usage(String),
    Io(String),
    /// The check ran and found a problem.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn max_n() -> Result<u32, Failure> {
    match std::env::var(MAX_N_ENV) {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(n) if n <= MAX_TABLE_WIDTH => Ok(n),
            _ => Err(Failure::Usage(format!(
                "{MAX_N_ENV} must be an integer in 0..={MAX_TABLE_WIDTH}, got {v:?}"
            ))),
        },
    }
}

fn guarded(spec: &IntervalSpec) -> Result<u32, Failure> {
    let limit = max_n()?;
    if spec.n() > limit {
        return Err(Failure::Usage(format!(
            "n={} exceeds the verification limit {limit} (set {MAX_N_ENV} to change it)",
            spec.n()
        )));
    }
    Ok(limit)
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    let res = match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to stdout: {e}")),
    };
    res.map_err(Failure::Io)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Synth {
            bounds,
            format,
            out,
        } => {
            let spec = bounds.spec()?;
            let f = interval_formula(&spec);
            let text = match format {
                CircuitFormat::Expr => format!("{f}\n"),
                CircuitFormat::Bristol => to_bristol(&lower_to_netlist(&f, spec.n() as usize)?),
                CircuitFormat::Json => {
                    let mut s = to_json(&lower_to_netlist(&f, spec.n() as usize)?);
                    s.push('\n');
                    s
                }
            };
            write_output(out.as_ref(), &text)?;
            eprintln!(
                "{spec}: and_gates={} predicted={} naive={}",
                f.mult_cost(),
                predicted_mc(&spec),
                naive_interval(&spec).mult_cost()
            );
        }
        Command::Verify { bounds } => {
            let spec = bounds.spec()?;
            let limit = guarded(&spec)?;
            let report = check_with_limit(&spec, limit)?;
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Degree { bounds } => {
            let spec = bounds.spec()?;
            guarded(&spec)?;
            let t = truth_table(&interval_formula(&spec), spec.n())?;
            let anf = anf_of(&t);
            println!(
                "n={} a={} b={} degree={} lower_bound={}",
                spec.n(),
                spec.a().value(),
                spec.b().value(),
                anf.degree(),
                anf.degree_lower_bound()
            );
        }
        Command::Cost { bounds } => {
            let spec = bounds.spec()?;
            println!(
                "n={} a={} b={} predicted={} actual={} naive={} cmp_a={} cmp_b={}",
                spec.n(),
                spec.a().value(),
                spec.b().value(),
                predicted_mc(&spec),
                interval_formula(&spec).mult_cost(),
                naive_interval(&spec).mult_cost(),
                comparator_cost(&spec.a()),
                comparator_cost(&spec.b()),
            );
        }
        Command::Sweep {
            n,
            format,
            sample,
            seed,
            extended,
        } => {
            let limit = max_n()?;
            if n == 0 || n > limit {
                return Err(Failure::Usage(format!(
                    "sweep width must be in 1..={limit} (set {MAX_N_ENV} to change it)"
                )));
            }
            let domain = if extended {
                Domain::Extended
            } else {
                Domain::Strict
            };
            let pairs = sweep::pairs(n, domain, sample, seed);
            let rows = sweep::run(n, &pairs, limit)?;
            let sep = match format {
                TableFormat::Csv => ',',
                TableFormat::Tsv => '\t',
            };
            write_output(None, &sweep::render(&rows, sep))?;
            match sweep::max_savings_ratio(&rows) {
                Some(r) => eprintln!("n={n}: {} rows, max naive/actual ratio {r:.3}", rows.len()),
                None => eprintln!("n={n}: {} rows, no row with a nonzero cost", rows.len()),
            }
            let bad = rows.iter().filter(|r| r.is_violation()).count();
            if bad > 0 {
                eprintln!("{bad} rows violate equivalence or the predicted cost");
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
