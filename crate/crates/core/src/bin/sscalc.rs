//! `sscalc` — a calculator for augmented semi-simplicial sets and the
//! parallel calculus of integer sequences and matrices.
//!
//! Complexes travel between commands as JSON on stdin/stdout, so verbs
//! compose with ordinary shell pipes:
//!
//! ```text
//! sscalc build gamma 1 | sscalc transform sd --repeat 2 | sscalc cardinal
//! ```
//!
//! Exit codes: 0 on success, 1 on verification failure, 2 on usage or
//! input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sscalc::actions::{cylinder, cylinder0, cylinder2, subdivision};
use sscalc::seqmat::sequence::format_scalar;
use sscalc::seqmat::named;
use sscalc::sscore::{AugSSet, SubsetComplex};
use sscalc::verify;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sscalc",
    about = "Joins, cones, cylinders and barycentric subdivision of augmented \
             semi-simplicial sets, with the parallel sequence/matrix calculus",
    version
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Emit a complex as JSON on stdout
    Build {
        #[command(subcommand)]
        what: BuildWhat,
    },
    /// Read a complex from stdin, apply a construction, emit JSON
    Transform(TransformArgs),
    /// Read a complex from stdin and print its cardinal sequence
    Cardinal,
    /// Print a window of one of the named matrices
    Table(TableArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Check an OEIS closed form against a matrix column
    Oeis(OeisArgs),
}

#[derive(Subcommand)]
enum BuildWhat {
    /// The unit simplex Γ₊[n]
    Gamma {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// The boundary ∂Γ₊[n]
    Boundary {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// The hexagon: a 6-cycle of edges
    Hexagon,
    /// A subcomplex described by a generator file
    /// ({"kind":"subcomplex","ambient":N,"generators":[[..],..]})
    Subcomplex { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Cil,
    Cil0,
    Cil2,
    Sd,
    #[value(name = "cone-l")]
    ConeL,
    #[value(name = "cone-r")]
    ConeR,
    Join,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(value_enum)]
    op: TransformOp,
    /// Second operand for `join`: a file holding complex JSON
    file: Option<String>,
    /// Apply the construction this many times
    #[arg(long, default_value_t = 1)]
    repeat: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// One of: bin, bin-inv, breve-cil, cil, cil-partial, breve-cil0,
    /// cil0, cil0-partial, breve-cil2, cil2, cil2-partial, breve-cad+,
    /// cad+, cad
    name: String,
    /// Inclusive row range, e.g. -1..6
    #[arg(long, default_value = "-1..6", allow_hyphen_values = true)]
    rows: String,
    /// Inclusive column range, e.g. -1..7
    #[arg(long, default_value = "-1..7", allow_hyphen_values = true)]
    cols: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Commutation,
    Tables,
    Oracles,
    Nesting,
    #[value(name = "cone-sd")]
    ConeSd,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Size bound for the suite (ambient dimension of the corpus)
    #[arg(long, default_value_t = 5)]
    n: i64,
    /// Seed for the random corpus
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Args)]
struct OeisArgs {
    /// One of: pentagonal, A006331, A212415, matchstick, A210440,
    /// hexagonal, A002492
    check: String,
    /// Number of terms to verify (at most 1000)
    #[arg(long, default_value_t = 50)]
    count: i64,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_stdin_complex() -> Result<AugSSet, String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| format!("reading stdin: {e}"))?;
    AugSSet::from_json(&buf).map_err(|e| e.to_string())
}

fn emit(x: &AugSSet) -> Result<(), String> {
    let json = x.to_json().map_err(|e| e.to_string())?;
    println!("{json}");
    Ok(())
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range {s:?} must look like a..b"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo < -1 || hi < lo {
        return Err(format!("range {s:?} must satisfy -1 <= a <= b"));
    }
    Ok(lo..=hi)
}

fn run_build(what: BuildWhat) -> Result<(), String> {
    let x = match what {
        BuildWhat::Gamma { n } => SubsetComplex::gamma_complex(n.max(-1)).to_augsset(),
        BuildWhat::Boundary { n } => SubsetComplex::boundary_complex(n).to_augsset(),
        BuildWhat::Hexagon => SubsetComplex::hexagon().to_augsset(),
        BuildWhat::Subcomplex { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{file}: {e}"))?;
            SubsetComplex::from_generator_json(&text)
                .map_err(|e| e.to_string())?
                .to_augsset()
        }
    };
    emit(&x)
}

fn run_transform(args: TransformArgs) -> Result<(), String> {
    if args.repeat < 1 {
        return Err("--repeat must be at least 1".into());
    }
    let mut x = read_stdin_complex()?;
    x.validate().map_err(|e| format!("input: {e}"))?;
    let other = match (&args.op, &args.file) {
        (TransformOp::Join, Some(f)) => {
            let text = std::fs::read_to_string(f).map_err(|e| format!("{f}: {e}"))?;
            let y = AugSSet::from_json(&text).map_err(|e| e.to_string())?;
            Some(y)
        }
        (TransformOp::Join, None) => return Err("join needs a FILE operand".into()),
        (_, Some(_)) => return Err("only join takes a FILE operand".into()),
        _ => None,
    };
    for _ in 0..args.repeat {
        x = match args.op {
            TransformOp::Cil => cylinder(&x).map_err(|e| e.to_string())?,
            TransformOp::Cil0 => cylinder0(&x).map_err(|e| e.to_string())?,
            TransformOp::Cil2 => cylinder2(&x).map_err(|e| e.to_string())?,
            TransformOp::Sd => subdivision(&x).map_err(|e| e.to_string())?,
            TransformOp::ConeL => x.cone_left(),
            TransformOp::ConeR => x.cone_right(),
            TransformOp::Join => x.join(other.as_ref().expect("checked above")),
        };
    }
    x.validate().map_err(|e| format!("output: {e}"))?;
    emit(&x)
}

fn run_cardinal() -> Result<(), String> {
    let x = read_stdin_complex()?;
    x.validate().map_err(|e| e.to_string())?;
    println!("{:?}", x.cardinal());
    Ok(())
}

fn run_table(args: TableArgs) -> Result<(), String> {
    let mat = named::by_name(&args.name)
        .ok_or_else(|| format!("unknown table {:?}; known: {}", args.name, named::TABLE_NAMES.join(", ")))?;
    let rows = parse_range(&args.rows)?;
    let cols = parse_range(&args.cols)?;
    let window = mat
        .window(rows.clone(), cols.clone())
        .map_err(|e| e.to_string())?;
    match args.format {
        Format::Json => {
            let data: Vec<Vec<String>> = window
                .iter()
                .map(|row| row.iter().map(format_scalar).collect())
                .collect();
            let doc = serde_json::json!({
                "kind": "table",
                "name": args.name,
                "rows": [rows.start(), rows.end()],
                "cols": [cols.start(), cols.end()],
                "data": data,
            });
            println!("{doc}");
        }
        Format::Text => {
            // right-aligned cells with -1-first headers, one row label per
            // line, mirroring the usual table layout
            let header: Vec<String> = cols.clone().map(|c| c.to_string()).collect();
            let labels: Vec<String> = rows.clone().map(|r| r.to_string()).collect();
            let cells: Vec<Vec<String>> = window
                .iter()
                .map(|row| row.iter().map(format_scalar).collect())
                .collect();
            let label_w = labels
                .iter()
                .map(|l| l.len())
                .max()
                .unwrap_or(0)
                .max(args.name.len());
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &cells {
                for (j, cell) in row.iter().enumerate() {
                    widths[j] = widths[j].max(cell.len());
                }
            }
            let mut line = format!("{:>label_w$} |", args.name);
            for (j, h) in header.iter().enumerate() {
                line.push_str(&format!(" {:>w$}", h, w = widths[j]));
            }
            println!("{line}");
            let total = line.len();
            println!("{}", "-".repeat(total));
            for (i, row) in cells.iter().enumerate() {
                let mut line = format!("{:>label_w$} |", labels[i]);
                for (j, cell) in row.iter().enumerate() {
                    line.push_str(&format!(" {:>w$}", cell, w = widths[j]));
                }
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<verify::Report, String> {
    let rep = match args.suite {
        Suite::Tables => verify::verify_tables(),
        Suite::Commutation => verify::verify_commutation(args.n.min(5), 200, args.seed)
            .map_err(|e| e.to_string())?,
        Suite::Oracles => verify::verify_oracles(100, args.seed).map_err(|e| e.to_string())?,
        Suite::Nesting => verify::verify_nesting(args.n.min(6)),
        Suite::ConeSd => verify::verify_cone_sd(args.n.min(5)).map_err(|e| e.to_string())?,
        Suite::All => verify::verify_all(args.n, args.seed).map_err(|e| e.to_string())?,
    };
    Ok(rep)
}

fn run_oeis(args: OeisArgs) -> Result<verify::Report, String> {
    if args.count < 1 || args.count > 1000 {
        return Err("--count must be between 1 and 1000".into());
    }
    verify::verify_oeis(&args.check, args.count).ok_or_else(|| {
        format!(
            "unknown check {:?}; known: {}",
            args.check,
            verify::OEIS_CHECKS.join(", ")
        )
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<Option<verify::Report>, String> = match cli.verb {
        Verb::Build { what } => run_build(what).map(|_| None),
        Verb::Transform(args) => run_transform(args).map(|_| None),
        Verb::Cardinal => run_cardinal().map(|_| None),
        Verb::Table(args) => run_table(args).map(|_| None),
        Verb::Verify(args) => run_verify(args).map(Some),
        Verb::Oeis(args) => run_oeis(args).map(Some),
    };
    match outcome {
        Err(msg) => usage_error(&msg),
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(rep)) => {
            print!("{}", rep.render());
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
