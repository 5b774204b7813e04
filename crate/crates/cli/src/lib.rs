//! Library side of the `gvpoly` command line tool: input parsing, the
//! commands themselves and JSON report assembly. `main.rs` only handles
//! arguments, files and exit codes.

pub mod commands;
pub mod document;
pub mod report;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use report::Report;

/// Exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_MATH: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("validation failed: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) | CliError::Math(_) => EXIT_MATH,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Math(_) => "math",
        }
    }
}

impl From<gvpoly::Error> for CliError {
    fn from(e: gvpoly::Error) -> Self {
        match e {
            gvpoly::Error::Parse(m) => CliError::Parse(m),
            other => CliError::Math(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the fan and characteristic map.
    Validate,
    /// Regions of the virtual polytope with their winding weights.
    Chain,
    /// Coefficients of the volume polynomial.
    Volpoly,
    /// Integral of --q over the virtual polytope.
    Integrate,
    /// Graded dimensions by three independent routes.
    Betti,
    /// Cohomology ring data from the volume polynomial.
    Cohomology,
    /// Homotopy type of the hyperplane union and of the region complement.
    Homotopy,
    /// Nerve of the hyperplane arrangement.
    Nerve,
    /// Domination between the nerves of two arrangements.
    Dominates,
    /// Cells of each dimension from incoming-ray indices.
    Cells,
    /// Chain volume against the volume polynomial on random h.
    Bkkcheck,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Chain => "chain",
            Command::Volpoly => "volpoly",
            Command::Integrate => "integrate",
            Command::Betti => "betti",
            Command::Cohomology => "cohomology",
            Command::Homotopy => "homotopy",
            Command::Nerve => "nerve",
            Command::Dominates => "dominates",
            Command::Cells => "cells",
            Command::Bkkcheck => "bkkcheck",
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "gvpoly", version, about = "Exact virtual polytopes, volume polynomials and cohomology rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Options {
    /// Input document; give it twice for `dominates`.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Vec<std::path::PathBuf>,
    /// Support numbers, e.g. "0,0,1/2"; overrides the document's h.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub h: Option<String>,
    /// Integrand in x1..xn, e.g. "x1^2*x2 + 3/2*x1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Generic vector for `cells` and `betti`, e.g. "3,1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub v: Option<String>,
    /// Single-line JSON.
    #[arg(long, global = true)]
    pub compact: bool,
}

/// Runs `command` on the raw bytes of the input files.
pub fn run(command: Command, inputs: &[Vec<u8>], options: &Options) -> Report {
    let mut report = Report::new(command, inputs, options);
    match commands::dispatch(command, inputs, options) {
        Ok(out) => report.finish(out),
        Err(e) => report.fail(e),
    }
    report
}
