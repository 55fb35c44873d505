//! Driver for `alpha-core`: single evaluations, cross-method comparison
//! reports, seeded identity suites and plot-ready tables.
//!
//! The `alpha` binary is a thin wrapper around [`run`].

pub mod args;
pub mod error;
pub mod eval;
pub mod format;
pub mod table;
pub mod verify;

use std::fs;

pub use args::{Cli, Command};
pub use error::CliError;

/// Environment variable overriding the default tolerance of every subcommand.
pub const TOL_ENV: &str = "ALPHA_TOL";

/// Rendered output plus the process exit code it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Text written to standard output (or `--output`).
    pub text: String,
    /// Process exit code.
    pub code: i32,
}

/// Resolves a tolerance: explicit flag, then `ALPHA_TOL`, then `default`.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>, default: f64) -> Result<f64, CliError> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(raw)) => raw
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}={raw:?} is not a number")))?,
        (None, None) => default,
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be a positive real, got {tol}"
        )));
    }
    Ok(tol)
}

/// Executes a parsed command line. `env_tol` is the raw value of `ALPHA_TOL`.
pub fn run(cli: &Cli, env_tol: Option<&str>) -> Result<Outcome, CliError> {
    let (outcome, output) = match &cli.command {
        Command::Eval(a) => (eval::cmd_eval(a, env_tol)?, a.output.as_ref()),
        Command::Compare(a) => (eval::cmd_compare(a, env_tol)?, a.output.as_ref()),
        Command::Verify(a) => (verify::cmd_verify(a), a.output.as_ref()),
        Command::Table(a) => (table::cmd_table(a)?, a.output.as_ref()),
    };
    match output {
        Some(path) => {
            fs::write(path, &outcome.text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome {
                text: String::new(),
                code: outcome.code,
            })
        }
        None => Ok(outcome),
    }
}
