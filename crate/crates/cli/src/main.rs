//! `hardy-rellich` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a verification case fails or output
//! cannot be written, 2 on usage or parameter errors.

mod args;
mod commands;
mod error;
mod format;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliResult;

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Constant {
            point,
            output,
            oracle,
        } => commands::constant(&point, &output, &oracle).map(|_| true),
        Command::Classify { point, output } => commands::classify(&point, &output).map(|_| true),
        Command::Sweep {
            n,
            m_min,
            m_max,
            steps,
            output,
            oracle,
        } => commands::sweep(n, m_min, m_max, steps, &output, &oracle).map(|_| true),
        Command::Verify {
            suite,
            output,
            eps,
            tol,
            grid,
        } => commands::verify(suite, &output, eps, tol, &grid),
        Command::Boundaries { n, output } => commands::boundaries(n, &output).map(|_| true),
        Command::Compare { point, output } => commands::compare(&point, &output).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
