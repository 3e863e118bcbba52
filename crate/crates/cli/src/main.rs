//! `otto` — quantum Otto cycle with squeezed thermal reservoirs.
//!
//! Subcommands: `point` (single-config evaluation), `optimize`
//! (maximum-work / maximum-chi operating points), `sweep`
//! (figure-reproduction data as CSV/JSON), `mc-verify` (Monte Carlo check
//! of the internal-energy law).
//!
//! Exit codes are a stable contract: 0 success, 2 validation failure,
//! 3 infeasible configuration, 4 Monte Carlo verification failure.

mod args;
mod config;
mod mc_verify;
mod optimize;
mod point;
mod render;
mod sweep;

use args::{Cli, Command};
use clap::Parser;
use config::FileConfig;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, config file, or domain inputs (exit 2).
    Validation(String),
    /// No operating window for the requested mode (exit 3).
    Infeasible(String),
    /// Monte Carlo verdict FAIL (exit 4).
    McFail(String),
    /// I/O trouble writing output (exit 1).
    Io(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::McFail(_) => 4,
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m)
            | CliError::Infeasible(m)
            | CliError::McFail(m)
            | CliError::Io(m) => m,
        }
    }
}

impl From<otto_core::Error> for CliError {
    fn from(err: otto_core::Error) -> Self {
        match err {
            otto_core::Error::NoOperatingWindow { .. } => CliError::Infeasible(err.to_string()),
            _ => CliError::Validation(err.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}", err.message());
        std::process::exit(err.code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = match cli.config.as_deref() {
        Some(path) => config::load(path)?,
        None => FileConfig::default(),
    };
    let jobs = cli.jobs.or(file.jobs);
    let dispatch = || -> Result<(), CliError> {
        match &cli.command {
            Command::Point(a) => point::run(a, &cli, &file),
            Command::Optimize(a) => optimize::run(a, &cli, &file),
            Command::Sweep(a) => sweep::run(a, &cli, &file),
            Command::McVerify(a) => mc_verify::run(a, &cli, &file),
        }
    };
    match jobs {
        Some(0) => Err(CliError::Validation("jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Validation(format!("cannot build a {n}-thread pool: {e}")))?
            .install(dispatch),
        None => dispatch(),
    }
}
