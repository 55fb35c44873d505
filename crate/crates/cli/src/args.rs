//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Evaluate and cross-check the alpha function sum x^n/(n!)^s.
#[derive(Debug, Parser)]
#[command(name = "alpha", version, about)]
pub struct Cli {
    /// Subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate alpha(x, s) by one method.
    Eval(EvalArgs),
    /// Evaluate alpha(x, s) by every applicable method and compare.
    Compare(CompareArgs),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Tabulate series against the Hadamard route over a grid of x.
    Table(TableArgs),
}

/// Evaluation route for `eval`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Direct series summation.
    Series,
    /// Iterated Hadamard product with exp (s >= 2).
    Hadamard,
    /// I0(2 sqrt(x)) (s = 2, x >= 0).
    Bessel,
}

/// Output format of `eval` and `compare`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    /// Human-readable.
    Text,
    /// Single JSON object.
    Json,
}

/// Output format of `table`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    /// Header plus one comma-separated row per grid point.
    Csv,
    /// Array of row objects.
    Json,
    /// Aligned columns.
    Text,
}

/// Identity suites for `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Hadamard product of random polynomials against coefficient convolution.
    #[value(name = "theorem1")]
    Theorem1,
    /// Circle average of e^{a cos t + b sin t} against I0.
    #[value(name = "bessel_eq1")]
    BesselEq1,
    /// Stirling-number ODE residual of alpha(., s).
    #[value(name = "ode")]
    Ode,
    /// Stirling numbers against enumeration, and their generating function.
    #[value(name = "stirling_gf")]
    StirlingGf,
    /// Real expansion of the s = 3 torus integrand against its complex form.
    #[value(name = "expansion_s3")]
    ExpansionS3,
    /// Every suite above.
    #[value(name = "all")]
    All,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Argument x.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Factorial power s (>= 1).
    #[arg(long)]
    pub s: u32,
    /// Evaluation route.
    #[arg(long, value_enum, default_value_t = Method::Series)]
    pub method: Method,
    /// Series term tolerance, or node-doubling tolerance for the Hadamard route.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Argument x.
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Factorial power s (>= 1).
    #[arg(long)]
    pub s: u32,
    /// Largest admissible pairwise difference between methods.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// First grid point.
    #[arg(long, allow_negative_numbers = true)]
    pub x_min: f64,
    /// Last grid point.
    #[arg(long, allow_negative_numbers = true)]
    pub x_max: f64,
    /// Number of grid points (>= 1).
    #[arg(long)]
    pub steps: usize,
    /// Factorial power s (>= 2).
    #[arg(long)]
    pub s: u32,
    /// Output format.
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
