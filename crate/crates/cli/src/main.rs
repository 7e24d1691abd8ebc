use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cm2_cli::{
    cmd_analyze, cmd_charpoly, cmd_charpoly_counts, cmd_field, cmd_lemma2, cmd_oracle,
    cmd_scan_oracle, cmd_scan_theorem, exit, CurveSet, GridParams, OracleMode, Outcome,
};
use cm2_core::{Error, DEFAULT_BUDGET};
use num_bigint::BigInt;
use serde_json::json;

/// Frobenius polynomials, p-Sylow checks and brute-force Jacobians for
/// genus-2 curves with CM by a quartic field.
#[derive(Parser, Debug)]
#[command(name = "cm2", version)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Squarefree D > 1 of the real quadratic subfield Q(sqrt D).
    #[arg(short = 'D', allow_hyphen_values = true)]
    d: i64,
    /// eta² = -(a + b·xi).
    #[arg(short, allow_hyphen_values = true, value_parser = parse_big)]
    a: BigInt,
    #[arg(short, allow_hyphen_values = true, value_parser = parse_big)]
    b: BigInt,
}

#[derive(Args, Debug, Clone)]
struct OmegaArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Frobenius element c1,c2,c3,c4 for (c1 + c2·xi) + (c3 + c4·xi)·eta.
    #[arg(short, allow_hyphen_values = true, value_delimiter = ',', value_parser = parse_big)]
    c: Vec<BigInt>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a CM field and classify its Galois closure.
    Field(FieldArgs),
    /// Run the full pipeline for a Frobenius element and report the p-Sylow order.
    Analyze(OmegaArgs),
    /// Characteristic polynomial of Frobenius, from an element or from point counts.
    Charpoly(CharpolyArgs),
    /// Exhaustive check of the small-prime case p ≤ 5.
    Lemma2 {
        /// Include every enumerated row.
        #[arg(long)]
        rows: bool,
    },
    /// Point counts and Jacobian enumeration for y² = f(x) over F_p.
    Oracle {
        #[arg(short)]
        p: u64,
        /// Coefficients of f, lowest degree first.
        #[arg(
            long,
            required = true,
            allow_hyphen_values = true,
            value_delimiter = ','
        )]
        coeffs: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
        #[arg(long, env = "CM2_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sweep a grid of inputs.
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
}

#[derive(Args, Debug)]
struct CharpolyArgs {
    #[arg(short = 'D', allow_hyphen_values = true, requires_all = ["a", "b", "c"])]
    d: Option<i64>,
    #[arg(short, allow_hyphen_values = true, value_parser = parse_big)]
    a: Option<BigInt>,
    #[arg(short, allow_hyphen_values = true, value_parser = parse_big)]
    b: Option<BigInt>,
    #[arg(short, allow_hyphen_values = true, value_delimiter = ',', value_parser = parse_big)]
    c: Vec<BigInt>,
    /// Characteristic, for --counts.
    #[arg(short, requires = "counts", conflicts_with = "d")]
    p: Option<u64>,
    /// N1,N2: points over F_p and F_{p²}.
    #[arg(long, value_delimiter = ',', requires = "p")]
    counts: Vec<u64>,
}

#[derive(Subcommand, Debug)]
enum ScanKind {
    /// Closed form, 4 | P(1) and the p-Sylow bound over a box of fields and elements.
    Theorem {
        #[arg(long, default_value_t = 20)]
        max_d: i64,
        #[arg(long, default_value_t = 8)]
        ab_bound: i64,
        #[arg(long, default_value_t = 6)]
        c_bound: i64,
    },
    /// Enumerated Jacobian order against P(1) for many quintics over F_p.
    Oracle {
        #[arg(short)]
        p: u64,
        /// Every squarefree quintic instead of a random sample.
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "CM2_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Count,
    Enumerate,
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not an integer"))
}

fn omega(c: &[BigInt]) -> Result<[BigInt; 4], Error> {
    c.to_vec().try_into().map_err(|v: Vec<BigInt>| {
        Error::InvalidArgument(format!("-c needs exactly 4 coefficients, got {}", v.len()))
    })
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Field(f) => cmd_field(f.d, &f.a, &f.b),
        Command::Analyze(o) => match omega(&o.c) {
            Ok(c) => cmd_analyze(o.field.d, &o.field.a, &o.field.b, &c),
            Err(e) => Outcome::failed("analyze", json!({}), &e),
        },
        Command::Charpoly(args) => charpoly(args),
        Command::Lemma2 { rows } => cmd_lemma2(rows),
        Command::Oracle {
            p,
            coeffs,
            mode,
            budget,
        } => {
            let mode = match mode {
                Mode::Count => OracleMode::Count,
                Mode::Enumerate => OracleMode::Enumerate,
            };
            cmd_oracle(p, &coeffs, mode, budget)
        }
        Command::Scan { kind } => match kind {
            ScanKind::Theorem {
                max_d,
                ab_bound,
                c_bound,
            } => cmd_scan_theorem(&GridParams {
                max_d,
                ab_bound,
                c_bound,
            }),
            ScanKind::Oracle {
                p,
                exhaustive,
                samples,
                seed,
                budget,
            } => {
                let set = if exhaustive {
                    CurveSet::Exhaustive
                } else {
                    CurveSet::Random { samples, seed }
                };
                cmd_scan_oracle(p, &set, budget)
            }
        },
    }
}

fn charpoly(args: CharpolyArgs) -> Outcome {
    match (args.p, args.d, args.a, args.b) {
        (Some(p), ..) => match args.counts[..] {
            [n1, n2] => cmd_charpoly_counts(p, n1, n2),
            _ => Outcome::failed(
                "charpoly",
                json!({}),
                &Error::InvalidArgument("--counts takes exactly N1,N2".into()),
            ),
        },
        (None, Some(d), Some(a), Some(b)) => match omega(&args.c) {
            Ok(c) => cmd_charpoly(d, &a, &b, &c),
            Err(e) => Outcome::failed("charpoly", json!({}), &e),
        },
        _ => Outcome::failed(
            "charpoly",
            json!({}),
            &Error::InvalidArgument("give either -D/-a/-b/-c or -p with --counts".into()),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command);
    let text = if cli.pretty {
        outcome.report.to_pretty()
    } else {
        outcome.report.to_json()
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(exit::INPUT as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.exit_code as u8)
}
