//! `csl`: batch front end for the csl-core constructions and checks.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! and 2 on a usage error.

mod commands;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Chain,
    Braid,
    Cube,
    CubeEdge,
    Icosahedral,
    Helical,
}

#[derive(Debug, Parser)]
#[command(
    name = "csl",
    version,
    about = "Cusp symmetry lab: transitivity, Biggs maps, link families, dilatation"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Residual tolerance for the eigen-solve.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the Biggs map of order n and compare its genus with the formula.
    Map {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Symmetry group order and transitivity degree of one link family.
    Transitivity {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Components (chain) or field order (helical).
        #[arg(long)]
        n: Option<u32>,
        /// Half-twists of a chain.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
        /// Power of the braid closure.
        #[arg(long)]
        m: Option<usize>,
    },
    /// One-table summary of every link family.
    Links,
    /// Dilatation and transverse weights of the point-pushing monodromy.
    Dilatation,
    /// Helical links over every prime power in a range.
    Census {
        #[arg(long, default_value_t = 4)]
        from: u32,
        #[arg(long, default_value_t = 13)]
        to: u32,
    },
}

fn render(outcome: &Outcome, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize");
            s.push('\n');
            Ok(s)
        }
        Format::Table => Ok(outcome.table.clone()),
        Format::Dot => outcome
            .dot
            .clone()
            .ok_or(CliError::Usage("this command has no DOT output".into())),
    }
}

fn run(config: &RunConfig) -> Result<bool, CliError> {
    let outcome = commands::execute(config)?;
    let text = render(&outcome, config.format)?;
    match &config.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
