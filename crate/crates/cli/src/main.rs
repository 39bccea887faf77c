//! `tightclosure`: bounds, relations and membership decisions for tight
//! closure of primary ideals on plane curves.

mod commands;
mod document;
mod error;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use commands::Options;
use document::{parse_document, parse_range, Problem, SCHEMA_VERSION};
use error::CliError;

#[derive(Parser)]
#[command(name = "tightclosure", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Problem document (JSON); `-` reads standard input.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Print the machine-readable report.
    #[arg(long, global = true)]
    json: bool,

    /// Limit on S-pairs per Gröbner computation.
    #[arg(long, global = true, value_name = "N")]
    max_pairs: Option<usize>,

    /// Largest power of x and y tried as a Čech denominator.
    #[arg(long, global = true, value_name = "N")]
    max_denominator_exp: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Degree bounds with citation tags.
    Bounds,
    /// Relation matrix and splitting twists.
    Syzygy,
    /// Verdict for one element.
    Decide {
        /// Overrides the document's `element`.
        #[arg(long, value_name = "POLY")]
        element: Option<String>,
    },
    /// Verdict counts over monomial bases of a degree range.
    Sweep {
        /// Inclusive range `lo..hi`; overrides the document's `sweep`.
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
        range: Option<String>,
    },
    /// Table of h0 and h1 of O(k) on the curve.
    Cohomology {
        /// Inclusive range `lo..hi` of twists.
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
        range: Option<String>,
    },
}

fn load(path: Option<&PathBuf>) -> Result<Problem, CliError> {
    let path = path.ok_or_else(|| CliError::Input("missing --input <FILE>".into()))?;
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))?;
    }
    parse_document(&text)
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<String, CliError> {
    if json {
        serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Internal(e.to_string()))
    } else {
        Ok(text(value))
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let problem = load(cli.input.as_ref())?;
    let opts = Options {
        max_pairs: cli.max_pairs,
        max_denominator_exp: cli.max_denominator_exp,
    };
    let range = |r: &Option<String>| r.as_deref().map(parse_range).transpose();
    match &cli.command {
        Command::Bounds => {
            let (r, c) = commands::bounds(&problem, &opts)?;
            emit(cli.json, &r, |r| r.text(c))
        }
        Command::Syzygy => emit(cli.json, &commands::syzygy(&problem, &opts)?, |r| r.text()),
        Command::Decide { element } => emit(cli.json, &commands::decide(&problem, &opts, element.as_deref())?, |r| {
            r.text()
        }),
        Command::Sweep { range: r } => emit(cli.json, &commands::sweep(&problem, &opts, range(r)?)?, |r| r.text()),
        Command::Cohomology { range: r } => emit(cli.json, &commands::cohomology(&problem, range(r)?)?, |r| r.text()),
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    schema_version: u32,
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'static str,
    message: &'a str,
    exit_code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                let body = ErrorReport {
                    schema_version: SCHEMA_VERSION,
                    error: ErrorBody {
                        kind: e.kind(),
                        message: e.message(),
                        exit_code: e.exit_code(),
                    },
                };
                if let Ok(s) = serde_json::to_string_pretty(&body) {
                    println!("{s}");
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
