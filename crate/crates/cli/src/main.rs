//! `affmon`: build, verify and analyse commutative monoid structures on
//! affine spaces from the command line.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check fails
//! (the report carries a witness), 2 on usage or parse errors.

mod commands;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "affmon", version, about = "Commutative monoid structures on affine spaces")]
pub struct Cli {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List or build catalog monoids.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Check the monoid axioms of a monoid JSON file (`-` for stdin).
    Verify { input: PathBuf },
    /// Normal forms of derivation pairs, stabilizers and additive actions.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Idempotents, nilpotents and group-like powers.
    #[command(subcommand)]
    Structure(StructureCmd),
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    List,
    Build {
        family: String,
        #[command(flatten)]
        params: FamilyParams,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    /// One value, or a comma-separated list for corank1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub b: Vec<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
    #[arg(long)]
    pub normalized: Option<bool>,
    /// A preset name (kkk, k-kt2, kt1t2, kt3) or a structure-constants file.
    #[arg(long)]
    pub algebra: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ClassifyCmd {
    /// Bring a commuting pair of derivations to normal form.
    Normalize {
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<i64>>,
        #[arg(long)]
        pair: PathBuf,
    },
    /// Separate the two rank-one families on A^3 by stabilizer lines.
    Distinguish {
        #[arg(long)]
        b: i64,
        #[arg(long)]
        c: i64,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2", allow_negative_numbers = true)]
        samples: Vec<String>,
    },
    /// The two additive actions on P(1,b,c), verified.
    Wpp {
        #[arg(long)]
        b: i64,
        #[arg(long)]
        c: i64,
    },
    /// Verify an additive action given as JSON.
    VerifyAction {
        #[arg(long)]
        action: PathBuf,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MonoidSource {
    /// Monoid JSON file (`-` for stdin).
    #[arg(long, conflicts_with = "family")]
    pub monoid: Option<PathBuf>,
    /// Catalog family name, with the same parameter flags as `catalog build`.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: FamilyParams,
}

#[derive(Subcommand, Debug)]
pub enum StructureCmd {
    Idempotents {
        #[command(flatten)]
        source: MonoidSource,
    },
    Nilpotent {
        #[command(flatten)]
        source: MonoidSource,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    Dichotomy {
        #[command(flatten)]
        source: MonoidSource,
        /// Radius of the integer grid.
        #[arg(long, default_value_t = 2)]
        grid: i64,
    },
    GroupLike {
        #[command(flatten)]
        source: MonoidSource,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

/// A finished command: JSON report, text rendering, exit status.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    pub status: u8,
}

#[derive(Debug)]
pub struct CliError(pub String);

impl From<affmon::Error> for CliError {
    fn from(e: affmon::Error) -> Self {
        CliError(e.to_string())
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            let mut body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("report serializes"),
                Format::Text => report.text,
            };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            if let Err(e) = emit(&cli, &body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(report.status)
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
