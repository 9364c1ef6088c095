//! `fockbasis` command line.
//!
//! Exit status: 0 on success, 1 when a `check` reports a failure, 2 for
//! usage errors and rejected input, 3 for computational failures (with a
//! JSON diagnostic on stderr).

mod cache;
mod checks;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{parse_charge, parse_ints, CliError, CliResult, Output};

#[derive(Parser)]
#[command(name = "fockbasis", version, about = "Canonical bases of level-l Fock spaces and symbol combinatorics")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on Fock space vectors.
    Fock {
        #[command(subcommand)]
        op: FockOp,
    },
    /// The canonical basis of rank N.
    Canon {
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        rank: usize,
        /// Directory for cached results.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Expansion of a simple symbol read from a JSON file.
    ExpandSimple {
        #[arg(long)]
        symbol: PathBuf,
    },
    /// Families of finite symbols with the given row lengths and entries.
    Family {
        #[arg(value_enum)]
        op: FamilyOp,
        /// Row lengths, top to bottom.
        #[arg(long)]
        charge: String,
        #[arg(long)]
        multiset: String,
    },
    /// Characters obtained at q = 1.
    Chars {
        #[arg(value_enum)]
        kind: CharsKind,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        rank: usize,
    },
    /// Consistency checks up to rank `scope`.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        /// Largest rank checked.
        #[arg(long, default_value_t = 3)]
        scope: usize,
    },
}

#[derive(Subcommand)]
enum FockOp {
    /// Applies a word `[[i,r],...]` of divided powers, first letter first.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Starting vector; the vacuum when omitted.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyOp {
    Enum,
    MinB,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharsKind {
    Jm,
    Constructible,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Serre,
    Oracle,
    Conj,
}

fn run(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Fock {
            op: FockOp::Apply { charge, word, input },
        } => commands::fock_apply(&parse_charge(&charge)?, &word, input.as_deref()),
        Command::Canon { charge, rank, cache } => commands::canon(&parse_charge(&charge)?, rank, cache.as_deref()),
        Command::ExpandSimple { symbol } => commands::expand(&symbol),
        Command::Family { op, charge, multiset } => {
            let (lengths, entries) = (parse_ints(&charge)?, parse_ints(&multiset)?);
            match op {
                FamilyOp::Enum => commands::family_enum(&lengths, &entries),
                FamilyOp::MinB => commands::family_min_b(&lengths, &entries),
            }
        }
        Command::Chars { kind, charge, rank } => {
            commands::chars(matches!(kind, CharsKind::Constructible), &parse_charge(&charge)?, rank)
        }
        Command::Check { kind, charge, scope } => {
            let s = parse_charge(&charge)?;
            let reports = match kind {
                CheckKind::Serre => checks::serre(&s, scope),
                CheckKind::Oracle => checks::oracle(&s, scope),
                CheckKind::Conj => checks::conj(&s, scope)?,
            };
            Ok(checks::render(reports))
        }
    }
}

fn error_kind(e: &fockbasis::Error) -> String {
    let d = format!("{e:?}");
    d.split(['(', ' ', '{']).next().unwrap_or("Error").to_string()
}

fn status(e: &CliError) -> u8 {
    match e {
        CliError::Lib(e) if e.is_computational() => 3,
        _ => 2,
    }
}

fn diagnostic(e: &CliError) -> String {
    match e {
        CliError::Usage(msg) => format!("error: {msg}"),
        CliError::Lib(e) => json!({"error": error_kind(e), "message": e.to_string()}).to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => &out.json,
                Format::Text => &out.text,
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            ExitCode::from(status(&e))
        }
    }
}
