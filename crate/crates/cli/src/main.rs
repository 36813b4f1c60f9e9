//! `hypquat` command-line front-end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on input errors.

mod commands;
mod config;
mod error;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{CommonArgs, Settings};
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "hypquat", version, about = "Invariants, verification suites and bending sweeps in quaternionic hyperbolic space")]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartan angular invariant of three boundary points
    ///
    /// Points are written as `z1,z2` (ball), `c:z1;t` (Carnot) or `inf`.
    Invariant {
        #[arg(allow_hyphen_values = true)]
        x1: String,
        #[arg(allow_hyphen_values = true)]
        x2: String,
        #[arg(allow_hyphen_values = true)]
        x3: String,
    },
    /// Run a verification suite (`all` runs every suite)
    Verify { suite: String },
    /// Sweep the bending parameter over a grid
    Bend { group: PathBuf },
    /// Evaluate the Toledo cochain on a triangulated cycle
    Character {
        cycle: PathBuf,
        vertices: PathBuf,
        /// Evaluate chains that are not closed, with a warning
        #[arg(long)]
        lenient: bool,
    },
    /// Sample the limit set of a group
    Limitset { group: PathBuf },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let s = Settings::resolve(&cli.common)?;
    match cli.command {
        Command::Invariant { x1, x2, x3 } => commands::invariant::run(&[x1, x2, x3], &s),
        Command::Verify { suite } => commands::verify::run(&suite, &s),
        Command::Bend { group } => commands::bend::run(&group, &s),
        Command::Character { cycle, vertices, lenient } => commands::character::run(&cycle, &vertices, lenient, &s),
        Command::Limitset { group } => commands::limitset::run(&group, &s),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
