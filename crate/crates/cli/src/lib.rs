//! Command-line surface over the `pcore` library: argument parsing, report
//! serialization, the result cache and exit codes.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage error,
//! `3` precision failure.

pub mod args;
pub mod cache;
pub mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use pcore::{Error, PrecisionConfig};
use serde_json::json;

use crate::args::Cli;
use crate::commands::{execute, CliError};
use crate::report::Precision;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

/// Runs one invocation against the process's stdout and stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn diagnostic(err: &mut dyn Write, kind: &str, message: &str) {
    let line = json!({ "error": kind, "message": message });
    let _ = writeln!(err, "{line}");
}

fn exit_code(e: &CliError) -> (i32, &'static str) {
    match e {
        CliError::Usage(_) | CliError::Io(_) => (EXIT_USAGE, "usage"),
        CliError::Core(Error::Domain(_)) | CliError::Core(Error::Guard(_)) => (EXIT_USAGE, "usage"),
        CliError::Core(Error::Precision(_)) => (EXIT_PRECISION, "precision"),
        CliError::Core(Error::Verification(_)) => (EXIT_VERIFICATION, "verification"),
    }
}

fn message(e: &CliError) -> String {
    match e {
        CliError::Usage(m) | CliError::Io(m) => m.clone(),
        CliError::Core(e) => e.to_string(),
    }
}

/// Runs one invocation, writing the result to `out` in a single write and
/// diagnostics to `err`. Returns the exit code.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            diagnostic(err, "usage", e.to_string().trim_end());
            return EXIT_USAGE;
        }
    };
    let cfg = match PrecisionConfig::with_digits(cli.prec) {
        Ok(cfg) => cfg,
        Err(e) => {
            diagnostic(err, "usage", &e.to_string());
            return EXIT_USAGE;
        }
    };

    let key = format!("{:?}|{}", cli.command, json!(Precision::from(&cfg)));
    let cached = cli.cache.as_deref().and_then(|path| cache::lookup(path, &key));
    let report = match cached {
        Some(r) => r,
        None => match execute(&cli.command, &cfg) {
            Ok(r) => {
                if let Some(path) = &cli.cache {
                    if let Err(e) = cache::store(path, &key, &r) {
                        diagnostic(err, "cache", &format!("could not append to {}: {e}", path.display()));
                    }
                }
                r
            }
            Err(e) => {
                let (code, kind) = exit_code(&e);
                diagnostic(err, kind, &message(&e));
                return code;
            }
        },
    };

    let rendered = match report.render(cli.format) {
        Ok(s) => s,
        Err(e) => {
            diagnostic(err, "output", &e);
            return EXIT_USAGE;
        }
    };
    if let Err(e) = out.write_all(rendered.as_bytes()).and_then(|_| out.flush()) {
        diagnostic(err, "output", &e.to_string());
        return EXIT_USAGE;
    }
    if report.pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}
