//! `spivey`: tables, identity sweeps and normal ordering from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.

mod args;
mod expr;
mod output;
mod table;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Failure modes that map onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(a) => table::run(a),
        Command::Verify(a) => verify::run(a),
        Command::NormalOrder(a) => expr::run_normal_order(a),
        Command::Apply(a) => expr::run_apply(a),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
