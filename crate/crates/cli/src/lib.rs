//! Subcommands of the `irrep` binary. Every command writes to the given
//! streams and returns its exit code, so tests can drive it in-process.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use irrep_core::rep::parse_representation;
use irrep_core::report::{analyze, json_to_text};
use irrep_core::structure::lorentz_scan;
use irrep_core::zoo::{self, catalog, check_table, ZooEntry};
use irrep_core::Error;

pub const EXIT_OK: i32 = 0;
/// A catalog entry did not reproduce its expected record.
pub const EXIT_MISMATCH: i32 = 1;
/// Malformed input, invalid parameters, unmet preconditions.
pub const EXIT_INPUT: i32 = 2;
/// A computed result contradicts one of the encoded theorems.
pub const EXIT_INCONSISTENCY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "irrep",
    version,
    about = "Exact analysis of real matrix Lie algebra representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the full pipeline on a representation file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit a catalog representation in the input format.
    Zoo {
        /// Catalog key; omit with --list.
        key: Option<String>,
        params: Vec<usize>,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// List the available keys.
        #[arg(long)]
        list: bool,
    },
    /// Reproduce the classification table from the catalog.
    CheckTable {
        /// Catalog JSON (an array of entries) replacing the built-in one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Random Lie-closed subalgebras of so(1,n) against the rigidity theorem.
    LorentzScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn error_code(e: &Error) -> i32 {
    if e.is_inconsistency() {
        EXIT_INCONSISTENCY
    } else {
        EXIT_INPUT
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::format(format!("cannot read {}: {e}", path.display())))
}

/// Runs a parsed command; diagnostics go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "irrep: {e}");
            error_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    writeln!(out, "{text}").map_err(|e| Error::format(format!("cannot write output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Analyze { file, format } => {
            let rep = parse_representation(&read(&file)?)?;
            let report = analyze(&rep)?;
            emit(
                out,
                &match format {
                    Format::Json => report.to_json_string(),
                    Format::Text => report.to_text(),
                },
            )?;
            Ok(EXIT_OK)
        }
        Command::Zoo { list: true, .. } => {
            for k in zoo::KEYS {
                let params = if k.params.is_empty() {
                    String::new()
                } else {
                    format!(" <{}>", k.params.join("> <"))
                };
                emit(out, &format!("{}{params}\t{}", k.key, k.description))?;
            }
            Ok(EXIT_OK)
        }
        Command::Zoo {
            key, params, output, ..
        } => {
            let key = key.ok_or_else(|| Error::validation("zoo needs a key (or --list)"))?;
            let doc = zoo::make(&key, &params)?.to_document();
            match output {
                Some(path) => fs::write(&path, format!("{doc}\n"))
                    .map_err(|e| Error::format(format!("cannot write {}: {e}", path.display())))?,
                None => emit(out, &doc)?,
            }
            Ok(EXIT_OK)
        }
        Command::CheckTable { catalog: path, format } => {
            let entries: Vec<ZooEntry> = match path {
                Some(p) => {
                    serde_json::from_str(&read(&p)?).map_err(|e| Error::format(format!("invalid catalog: {e}")))?
                }
                None => catalog(),
            };
            let check = check_table(&entries);
            match format {
                Format::Text => emit(out, &check.to_text())?,
                Format::Json => emit(
                    out,
                    &serde_json::to_string_pretty(&check).expect("table check serialises"),
                )?,
            }
            if check.entries.iter().any(|c| c.inconsistent) {
                return Ok(EXIT_INCONSISTENCY);
            }
            Ok(if check.passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::LorentzScan {
            n,
            trials,
            seed,
            format,
        } => {
            let report = lorentz_scan(n, trials, seed)?;
            let value = serde_json::to_value(&report).expect("scan report serialises");
            emit(
                out,
                &match format {
                    Format::Json => serde_json::to_string_pretty(&value).expect("scan report serialises"),
                    Format::Text => json_to_text(&value),
                },
            )?;
            Ok(if report.violations > 0 {
                EXIT_INCONSISTENCY
            } else {
                EXIT_OK
            })
        }
    }
}
