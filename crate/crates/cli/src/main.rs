use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use alpha_cli::{run, Cli, TOL_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_tol = std::env::var(TOL_ENV).ok();
    match run(&cli, env_tol.as_deref()) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(outcome.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("alpha: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
