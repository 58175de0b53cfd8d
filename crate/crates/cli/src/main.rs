//! `hnstrata`: command-line front end for the stratification library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hnstrata_core::connectivity::{connectivity, SurfaceBundleSpec};
use hnstrata_core::oracle::suites;
use hnstrata_core::oracle::VerificationReport;
use hnstrata_core::poset::{enumerate_strata, linear_extension, minimal_covers, validate_extension};
use hnstrata_core::strata::{codimension, make_sequence, to_path};
use hnstrata_core::{AdmissibleSequence, CodimensionReport, Error, Rational};

mod work;

#[derive(Parser)]
#[command(name = "hnstrata", version, about = "Exact combinatorics of Harder-Narasimhan / Yang-Mills strata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Codimension c1, c2, c and critical value l of one stratum.
    Codim {
        /// Sequence as JSON, e.g. "[[1,1],[5,1]]".
        #[arg(long)]
        mu: String,
        #[arg(long)]
        genus: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// All strata of rank n, degree k with codimension below the bound.
    Enumerate {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        bound: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dominance-compatible total order on the enumerated strata, by level.
    Linearize {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        bound: i64,
    },
    /// Minimal covers of a stratum in the dominance order.
    Covers {
        #[arg(long)]
        mu: String,
    },
    /// Minimum stratum codimension d and connectivity d - 2.
    Connectivity {
        /// e.g. "orientable,g=2,n=6,k=2" or "nonorientable,gt=1,n=4,class=minus".
        #[arg(long)]
        surface: String,
    },
    /// Run a brute-force verification suite and print its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        g_max: Option<i64>,
        /// Codimension bound for suites that enumerate strata.
        #[arg(long)]
        bound: Option<i64>,
        /// Include elapsed milliseconds in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Cyclic,
    Orientable,
    NonMinimal,
    Nonorientable,
    Klein,
    SmallNonorientable,
    Symmetric,
    Extension,
    Covers,
    Monotone,
    Enumeration,
    Reductions,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse_mu(text: &str) -> Result<AdmissibleSequence, Failure> {
    let pairs: Vec<(i64, i64)> = serde_json::from_str(text)
        .map_err(|e| Failure::Input(format!("cannot parse sequence '{text}': {e}")))?;
    Ok(make_sequence(&pairs)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

#[derive(Serialize)]
struct StratumRecord {
    blocks: AdmissibleSequence,
    c1: i64,
    c2: i64,
    c: i64,
    l: Rational,
    path: Vec<(i64, i64)>,
}

impl StratumRecord {
    fn new(mu: &AdmissibleSequence, report: CodimensionReport) -> Self {
        StratumRecord {
            blocks: mu.clone(),
            c1: report.c1,
            c2: report.c2,
            c: report.c,
            l: report.critical_value,
            path: to_path(mu).vertices().to_vec(),
        }
    }
}

fn json_compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

pub const CSV_HEADER: &str = "blocks,c1,c2,c,l,path";

fn csv_row(r: &StratumRecord) -> String {
    format!(
        "\"{}\",{},{},{},\"{}\",\"{}\"",
        json_compact(&r.blocks),
        r.c1,
        r.c2,
        r.c,
        r.l,
        json_compact(&r.path)
    )
}

#[derive(Serialize)]
struct OrderRow {
    position: usize,
    level: usize,
    blocks: AdmissibleSequence,
    c: i64,
    l: Rational,
}

#[derive(Serialize)]
struct LinearizeOutput {
    n: i64,
    k: i64,
    genus: i64,
    bound: i64,
    valid: bool,
    order: Vec<OrderRow>,
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Codim { mu, genus, format } => {
            let mu = parse_mu(&mu)?;
            let r = codimension(&mu, genus)?;
            match format {
                Format::Text => {
                    println!("c1  {}", r.c1);
                    println!("c2  {}", r.c2);
                    println!("c   {}", r.c);
                    println!("l   {}", r.critical_value);
                }
                _ => print_json(&r),
            }
        }
        Command::Enumerate { n, k, genus, bound, format } => {
            let set = enumerate_strata(n, k, genus, bound)?;
            let mut records = Vec::with_capacity(set.len());
            for mu in &set.members {
                records.push(StratumRecord::new(mu, codimension(mu, genus)?));
            }
            match format {
                Format::Csv => {
                    println!("{CSV_HEADER}");
                    for r in &records {
                        println!("{}", csv_row(r));
                    }
                }
                Format::Text => {
                    for r in &records {
                        println!("{:<32} c1={:<4} c2={:<4} c={:<4} l={}", r.blocks.to_string(), r.c1, r.c2, r.c, r.l);
                    }
                }
                Format::Json => print_json(&records),
            }
        }
        Command::Linearize { n, k, genus, bound } => {
            let set = enumerate_strata(n, k, genus, bound)?;
            let ext = linear_extension(&set)?;
            let valid = validate_extension(&ext);
            let mut order = Vec::with_capacity(ext.order.len());
            for (position, (mu, &level)) in ext.order.iter().zip(&ext.levels).enumerate() {
                let r = codimension(mu, genus)?;
                order.push(OrderRow { position, level, blocks: mu.clone(), c: r.c, l: r.critical_value });
            }
            print_json(&LinearizeOutput { n, k, genus, bound, valid, order });
            if !valid {
                eprintln!("error: linear extension failed validation");
                return Err(Failure::Verification);
            }
        }
        Command::Covers { mu } => {
            let mu = parse_mu(&mu)?;
            print_json(&minimal_covers(&mu)?);
        }
        Command::Connectivity { surface } => {
            let spec: SurfaceBundleSpec = surface.parse()?;
            print_json(&connectivity(&spec)?);
        }
        Command::Verify { suite, n_max, k_max, g_max, bound, timing } => {
            let params = work::SuiteParams::resolve(suite, n_max, k_max, g_max, bound);
            work::check_budget(suite, &params)?;
            let mut report = run_suite(suite, &params)?;
            if !timing {
                report.elapsed_ms = None;
            }
            print_json(&report);
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn run_suite(suite: Suite, p: &work::SuiteParams) -> Result<VerificationReport, Error> {
    match suite {
        Suite::Cyclic => suites::suite_cyclic(p.n_max, p.k_max),
        Suite::Orientable => suites::suite_orientable(p.n_max, p.k_max, p.g_max),
        Suite::NonMinimal => suites::suite_non_minimal_example(),
        Suite::Nonorientable => suites::suite_nonorientable(9..=p.n_max, &(2..=p.g_max).collect::<Vec<_>>()),
        Suite::Klein => suites::suite_klein(p.n_max),
        Suite::SmallNonorientable => suites::suite_small_nonorientable(p.n_max, p.g_max),
        Suite::Symmetric => suites::suite_symmetric(p.n_max, p.g_max),
        Suite::Extension => suites::suite_extension(p.n_max, p.k_max, p.g_max, p.bound),
        Suite::Covers => suites::suite_covers(p.n_max, p.k_max),
        Suite::Monotone => suites::suite_monotone(p.n_max, p.k_max, p.g_max, p.bound),
        Suite::Enumeration => suites::suite_enumeration(p.n_max, p.k_max, p.g_max, p.bound),
        Suite::Reductions => suites::suite_reductions(p.n_max, p.k_max, p.g_max),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
