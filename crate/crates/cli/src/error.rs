use thiserror::Error;

/// Failures surfaced to the command line, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or ranges (exit 2).
    #[error("{0}")]
    Usage(String),
    /// Error from the numerical core; exit code depends on the kind.
    #[error(transparent)]
    Core(#[from] alpha_core::Error),
    /// Output could not be written (exit 1).
    #[error("cannot write output: {0}")]
    Io(String),
}

impl CliError {
    /// 2 for invalid input, 3 for convergence failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use alpha_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidQuery(_)
                | E::InvalidArgument(_)
                | E::DomainViolation { .. }
                | E::Overflow { .. } => 2,
                E::NonConvergence { .. }
                | E::ToleranceNotReached { .. }
                | E::ImaginaryResidue { .. } => 3,
            },
            CliError::Io(_) => 1,
        }
    }
}
