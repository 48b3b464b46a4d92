//! The `flood` command line and the HTTP game service.

pub mod commands;
pub mod service;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::{Cli, Command};

/// Exit status for a solver error: 2 when a search budget ran out, 1 for
/// everything else.
pub fn exit_code(e: &flood_core::FloodError) -> i32 {
    match e {
        flood_core::FloodError::BudgetExhausted { .. } => 2,
        _ => 1,
    }
}

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match commands::execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
