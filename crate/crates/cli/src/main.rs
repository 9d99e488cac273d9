//! `pverify`: expand series, count partitions and run the verification
//! suites from the command line.
//!
//! Exit status is 0 when every requested check passes, 1 when any check
//! mismatches and 2 on usage errors.

mod checks;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use partition_verify::dirichlet::{arith_value, ArithFn};
use partition_verify::identities::{find, sequence};
use partition_verify::{count_restricted, expand_product, named_constraint, parse_product, TruncatedSeries};
use serde_json::json;

use report::Report;

#[derive(Debug, Parser)]
#[command(name = "pverify", version, about = "Exact verification of partition and q-series identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the coefficients of a product (catalog id or product spec).
    Expand {
        #[arg(long)]
        product: String,
        #[arg(long)]
        order: usize,
    },
    /// Count partitions of n under a named constraint (`name` or `name:param`).
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        constraint: String,
    },
    /// Print the first terms of a catalog sequence.
    Sequence {
        #[arg(long)]
        id: String,
        #[arg(long)]
        len: usize,
    },
    /// Verify one catalog identity.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Verify every catalog identity.
    VerifyAll {
        /// Multiplies each record's default order.
        #[arg(long, default_value_t = 1.0)]
        order_scale: f64,
        /// Count mismatches of proposed identities towards the exit status.
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        strict: bool,
    },
    /// Verify a Dirichlet coefficient claim (all claims when --id is omitted).
    Dirichlet {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Evaluate an arithmetic function.
    Arith {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: Option<u64>,
    },
    /// Run a floating-point check.
    Analytic {
        #[arg(long, value_enum)]
        check: AnalyticCheck,
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        t: Option<f64>,
        /// Product factors for the hyperbolic check.
        #[arg(long, default_value_t = 1000)]
        terms: usize,
    },
    /// Run a Schur-function check.
    Schur {
        #[arg(long, value_enum)]
        check: SchurCheck,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 20)]
        points: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AnalyticCheck {
    Mellin,
    Theta,
    Hagis,
    Hyperbolic,
    Parastat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchurCheck {
    DetVsSsyt,
    Littlewood,
}

/// What a subcommand produced.
enum Output {
    /// Plain values; never fails the run.
    Values { text: String, json: serde_json::Value },
    Checks { report: Report, strict: bool },
}

fn csv(values: &[impl ToString]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn strings(values: &[impl ToString]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn expand(spec: &str, order: usize) -> partition_verify::Result<TruncatedSeries> {
    match find(spec) {
        Ok(record) => Ok(record.builders[0].build(order)),
        Err(_) => Ok(expand_product(&parse_product(spec)?, order)),
    }
}

fn run(command: Command) -> partition_verify::Result<Output> {
    let checks = |checks: Vec<report::Check>| Output::Checks { report: Report::new(checks), strict: true };
    Ok(match command {
        Command::Expand { product, order } => {
            let series = expand(&product, order)?;
            let coeffs = series.coeffs();
            Output::Values {
                text: csv(coeffs),
                json: json!({ "product": product, "order": order, "coefficients": strings(coeffs) }),
            }
        }
        Command::Count { n, constraint } => {
            let count = count_restricted(n, &named_constraint(&constraint)?);
            Output::Values {
                text: count.to_string(),
                json: json!({ "n": n, "constraint": constraint, "count": count.to_string() }),
            }
        }
        Command::Sequence { id, len } => {
            let values = sequence(&id, len)?;
            Output::Values { text: csv(&values), json: json!({ "id": id, "values": strings(&values) }) }
        }
        Command::Verify { id, order } => checks(vec![checks::identity(&id, order)?]),
        Command::VerifyAll { order_scale, strict } => {
            if !(order_scale > 0.0 && order_scale.is_finite()) {
                return Err(partition_verify::Error::InvalidArgument("--order-scale must be positive".into()));
            }
            Output::Checks { report: Report::new(checks::all_identities(order_scale)), strict }
        }
        Command::Dirichlet { id, limit } => checks(checks::dirichlet(id.as_deref(), limit)?),
        Command::Arith { function, n, s } => {
            let f: ArithFn = function.parse()?;
            let v = arith_value(f, n, s)?;
            Output::Values { text: v.to_string(), json: json!({ "fn": f.name(), "n": n, "s": s, "value": v }) }
        }
        Command::Analytic { check, s, n, t, terms } => checks(vec![match check {
            AnalyticCheck::Mellin => checks::mellin(s.unwrap_or(2.0))?,
            AnalyticCheck::Theta => checks::theta(t)?,
            AnalyticCheck::Hagis => {
                let s = s.unwrap_or(2.0);
                if s.fract() != 0.0 || s < 0.0 {
                    return Err(partition_verify::Error::InvalidArgument("hagis needs an integer --s".into()));
                }
                checks::hagis(s as u64, n.unwrap_or(4000))?
            }
            AnalyticCheck::Hyperbolic => checks::hyperbolic(t.unwrap_or(1.0), terms)?,
            AnalyticCheck::Parastat => checks::parastat(t.unwrap_or(1.0))?,
        }]),
        Command::Schur { check, s, m, d, points, seed } => checks(vec![match check {
            SchurCheck::DetVsSsyt => checks::schur_det(s.unwrap_or(2), m.unwrap_or(2), points, seed)?,
            SchurCheck::Littlewood => {
                let m = m.unwrap_or(2);
                checks::schur_littlewood(m, d.unwrap_or(6), s.unwrap_or(m as u32))?
            }
        }]),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("pverify: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let output = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("pverify: {e}");
            return ExitCode::from(2);
        }
    };
    let (text, code) = match output {
        Output::Values { text, json } => match cli.format {
            Format::Text => (text + "\n", 0),
            Format::Json => (serde_json::to_string_pretty(&json).expect("json value") + "\n", 0),
        },
        Output::Checks { report, strict } => {
            let code = u8::from(report.failures(strict) > 0);
            match cli.format {
                Format::Text => (report.to_text(), code),
                Format::Json => (report.to_json() + "\n", code),
            }
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("pverify: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
