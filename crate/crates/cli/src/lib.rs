//! The `canonlab` command line: polynomials, identity checks, sweeps and
//! extension listings, as plain text, JSON or CSV.
//!
//! Exit status is 0 when everything asked for holds, 1 when an identity
//! fails (a certificate is printed), and 2 for usage, input or size errors.

pub mod args;
mod commands;
pub mod input;

use std::ffi::OsString;
use std::io::Write;

use canonlab_core::limits::CAP_ENV_VAR;
use canonlab_core::{Error, Limits};
use clap::Parser;

pub use args::{Cli, Command, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e @ Error::BruteForceCapExceeded { .. }) => write!(f, "{e} (raise it with --force-cap)"),
            CliError::Core(e @ Error::CapExceeded { .. }) => write!(f, "{e} (raise it with {CAP_ENV_VAR})"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// What a command produced: text for stdout, extra text for stderr, and
/// whether every checked identity held.
pub struct Report {
    pub body: String,
    pub notes: String,
    pub holds: bool,
}

/// Parses `args` (including the program name), runs the command and writes
/// its report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(cells) = cli.force_cap {
        limits = limits.with_brute_force_cells(cells);
    }
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs.get()).build() {
            Ok(pool) => pool.install(|| commands::execute(&cli, &limits)),
            Err(e) => Err(CliError::Usage(format!("cannot start {jobs} worker threads: {e}"))),
        },
        None => commands::execute(&cli, &limits),
    };
    match result {
        Ok(report) => {
            if out.write_all(report.body.as_bytes()).and_then(|()| out.flush()).is_err() {
                return EXIT_USAGE;
            }
            let _ = err.write_all(report.notes.as_bytes());
            if report.holds {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
