//! `cidim`: dimensions of `F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)` from the
//! command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error,
//! 3 internal integrity violation.

mod table;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use cidim_core::{
    colon_min_degree, deviation, dimension, dimension_oracle, hilbert_function_oracle, BranchStep,
    Error as CoreError, ExponentTriple,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Largest exponent the closed form accepts; keeps every product inside `u64`.
const MAX_EXPONENT: u64 = 1 << 31;

#[derive(Parser, Debug)]
#[command(
    name = "cidim",
    version,
    about = "Dimensions of F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)"
)]
struct Cli {
    /// Do not print the version banner on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    /// Largest exponent the brute-force oracle will accept.
    #[arg(long, global = true, env = "CIDIM_ORACLE_CAP", default_value_t = 512)]
    oracle_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct TripleArgs {
    d1: u64,
    d2: u64,
    d3: u64,
}

impl TripleArgs {
    fn triple(self) -> ExponentTriple {
        ExponentTriple::new(self.d1, self.d2, self.d3)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Total dimension of the quotient.
    Dim {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Emit a single JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Compare closed form and oracle on all sorted triples up to --max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// CSV of dim(i, j, j), or its increments in j with --diff.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_i: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_j: u64,
        #[arg(long)]
        diff: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hilbert function as degree,dimension CSV.
    Hilbert {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// The half-integer deviation e with dim = quadric/4 + e^2.
    Deviation {
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// First degree where (x^d1, y^d2 : (x+y)^d3) exceeds (x^d1, y^d2).
    Colon {
        #[command(flatten)]
        triple: TripleArgs,
    },
}

#[derive(Debug)]
enum Failure {
    Mismatch(String),
    Usage(String),
    Integrity(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Integrity(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) | Failure::Integrity(m) => m,
        }
    }
}

/// Successful stdout, or stdout plus a failure.
type Outcome = Result<String, (String, Failure)>;

#[derive(Serialize)]
struct DimJson<'a> {
    triple: ExponentTriple,
    dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    dimension_oracle: Option<u64>,
    deviation_doubled: Option<u64>,
    trace: &'a [BranchStep],
}

fn check_cap(t: ExponentTriple, cap: u64) -> Result<(), Failure> {
    if t.max() > cap {
        return Err(Failure::Usage(format!(
            "exponent {} exceeds the oracle cap {cap} (raise with --oracle-cap or CIDIM_ORACLE_CAP)",
            t.max()
        )));
    }
    Ok(())
}

fn check_exponent_range(t: ExponentTriple) -> Result<(), Failure> {
    if t.max() > MAX_EXPONENT {
        return Err(Failure::Usage(format!(
            "exponent {} exceeds the supported maximum {MAX_EXPONENT}",
            t.max()
        )));
    }
    Ok(())
}

fn check_positive(t: ExponentTriple) -> Result<(), Failure> {
    if t.has_zero() {
        return Err(Failure::Usage(format!(
            "exponents must be at least 1, got {t}"
        )));
    }
    Ok(())
}

fn cmd_dim(t: ExponentTriple, method: Method, json: bool, cap: u64) -> Outcome {
    check_exponent_range(t).map_err(|f| (String::new(), f))?;
    if method != Method::Formula {
        check_cap(t, cap).map_err(|f| (String::new(), f))?;
    }
    let report = dimension(t);
    let oracle = (method != Method::Formula).then(|| dimension_oracle(t));

    let mut out = String::new();
    if json {
        let obj = DimJson {
            triple: t,
            dimension: if method == Method::Oracle {
                oracle.unwrap_or(report.dimension)
            } else {
                report.dimension
            },
            dimension_oracle: oracle,
            deviation_doubled: report.deviation_doubled,
            trace: &report.trace,
        };
        out.push_str(&serde_json::to_string(&obj).expect("plain data serializes"));
        out.push('\n');
    } else {
        match (method, oracle) {
            (Method::Formula, _) => writeln!(out, "{}", report.dimension).unwrap(),
            (Method::Oracle, Some(o)) => writeln!(out, "{o}").unwrap(),
            (_, o) => {
                writeln!(out, "formula: {}", report.dimension).unwrap();
                writeln!(out, "oracle: {}", o.unwrap_or_default()).unwrap();
            }
        }
    }

    if let Some(o) = oracle.filter(|_| method == Method::Both) {
        if o != report.dimension {
            let msg = format!(
                "mismatch for {t}: formula {} vs oracle {o}",
                report.dimension
            );
            return Err((out, Failure::Mismatch(msg)));
        }
    }
    if report.deviation_doubled.is_none() {
        let msg = format!("4*dim - quadric is not a perfect square for {t}");
        return Err((out, Failure::Integrity(msg)));
    }
    Ok(out)
}

fn cmd_verify(max: u64, jobs: u64, cap: u64) -> Outcome {
    if max > cap {
        return Err((
            String::new(),
            Failure::Usage(format!("--max {max} exceeds the oracle cap {cap}")),
        ));
    }
    let report = verify::run(max, jobs as usize);
    let mut out = String::new();
    writeln!(out, "checked {} sorted triples", report.checked).unwrap();
    match report.mismatch {
        None => {
            writeln!(out, "result: ok").unwrap();
            Ok(out)
        }
        Some(m) => {
            writeln!(
                out,
                "first mismatch: {} formula={} oracle={}",
                m.triple, m.formula, m.oracle
            )
            .unwrap();
            writeln!(out, "result: mismatch").unwrap();
            Err((out, Failure::Mismatch(format!("mismatch at {}", m.triple))))
        }
    }
}

fn cmd_table(max_i: u64, max_j: u64, diff: bool, out: Option<PathBuf>) -> Outcome {
    if max_i.max(max_j) > MAX_EXPONENT {
        return Err((
            String::new(),
            Failure::Usage(format!("table bounds exceed {MAX_EXPONENT}")),
        ));
    }
    let csv = table::render(max_i, max_j, diff);
    match out {
        None => Ok(csv),
        Some(path) => match std::fs::write(&path, csv) {
            Ok(()) => Ok(String::new()),
            Err(e) => Err((
                String::new(),
                Failure::Usage(format!("cannot write {}: {e}", path.display())),
            )),
        },
    }
}

fn cmd_hilbert(t: ExponentTriple, cap: u64) -> Outcome {
    check_cap(t, cap).map_err(|f| (String::new(), f))?;
    let h = hilbert_function_oracle(t);
    let mut out = String::from("degree,dimension\n");
    for (d, v) in h.values.iter().enumerate() {
        writeln!(out, "{d},{v}").unwrap();
    }
    writeln!(out, "total,{}", h.total()).unwrap();
    Ok(out)
}

fn integrity(e: CoreError) -> (String, Failure) {
    match e {
        CoreError::NonSquareDiscriminant { .. } => {
            (String::new(), Failure::Integrity(e.to_string()))
        }
        other => (String::new(), Failure::Usage(other.to_string())),
    }
}

fn cmd_deviation(t: ExponentTriple) -> Outcome {
    check_exponent_range(t).map_err(|f| (String::new(), f))?;
    check_positive(t).map_err(|f| (String::new(), f))?;
    let e = deviation(t).map_err(integrity)?;
    Ok(format!("{e}\n"))
}

fn cmd_colon(t: ExponentTriple, cap: u64) -> Outcome {
    check_positive(t).map_err(|f| (String::new(), f))?;
    check_cap(t, cap).map_err(|f| (String::new(), f))?;
    let s = t.sorted();
    let degree = colon_min_degree(s).map_err(integrity)?;
    let e = deviation(s).map_err(integrity)?;
    // (d1 + d2 - d3 - 2e) / 2, clamped at zero
    let numerator = s.d1 as i128 + s.d2 as i128 - s.d3 as i128 - e.doubled as i128;
    let predicted = (numerator.max(0) / 2) as u64;

    let mut out = String::new();
    writeln!(out, "triple: {} {} {}", s.d1, s.d2, s.d3).unwrap();
    writeln!(out, "first_jump_degree: {degree}").unwrap();
    writeln!(out, "predicted: {predicted}").unwrap();
    if numerator > 0 && numerator % 2 != 0 {
        let msg = format!("prediction for {s} is not an integer");
        return Err((out, Failure::Integrity(msg)));
    }
    if degree != predicted {
        let msg = format!("colon degree {degree} disagrees with prediction {predicted} for {s}");
        return Err((out, Failure::Mismatch(msg)));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.quiet {
        eprintln!("cidim {}", env!("CARGO_PKG_VERSION"));
    }
    let cap = cli.oracle_cap;
    let outcome = match cli.command {
        Command::Dim {
            triple,
            method,
            json,
        } => cmd_dim(triple.triple(), method, json, cap),
        Command::Verify { max, jobs } => cmd_verify(max, jobs, cap),
        Command::Table {
            max_i,
            max_j,
            diff,
            out,
        } => cmd_table(max_i, max_j, diff, out),
        Command::Hilbert { triple } => cmd_hilbert(triple.triple(), cap),
        Command::Deviation { triple } => cmd_deviation(triple.triple()),
        Command::Colon { triple } => cmd_colon(triple.triple(), cap),
    };
    match outcome {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err((stdout, failure)) => {
            print!("{stdout}");
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
