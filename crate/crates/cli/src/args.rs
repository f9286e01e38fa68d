use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hardy-rellich",
    version,
    about = "Sharp constants of the weighted Hardy-Rellich inequality with radial derivative"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sharp constant, regime and degree table for one (N, m).
    Constant {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Regime and proof case for one (N, m).
    Classify {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        output: Output,
    },
    /// Uniform sweep over m, one row per value.
    Sweep {
        #[arg(long = "N")]
        n: u32,
        #[arg(long = "m-min", allow_negative_numbers = true)]
        m_min: f64,
        #[arg(long = "m-max", allow_negative_numbers = true)]
        m_max: f64,
        #[arg(long, default_value_t = 25)]
        steps: usize,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Run a verification battery on the built-in panel.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        output: Output,
        /// Decreasing epsilon values for trial extrapolation.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        eps: Option<Vec<f64>>,
        /// Quadrature tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Special values of m separating the regimes for a given N.
    Boundaries {
        #[arg(long = "N")]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Sharp constant against the full-gradient constant on record.
    Compare {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Point {
    /// Dimension.
    #[arg(long = "N")]
    pub n: u32,
    /// Weight exponent.
    #[arg(long = "m", allow_negative_numbers = true)]
    pub m: f64,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Emit JSON.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long)]
    pub csv: bool,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    /// Half-width T of the log-radius window [-T, T].
    #[arg(long = "grid-T")]
    pub grid_t: Option<f64>,
    /// Number of grid points.
    #[arg(long = "grid-points")]
    pub grid_points: Option<usize>,
    /// Largest spherical-harmonic degree.
    #[arg(long)]
    pub kmax: Option<u32>,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OracleArgs {
    /// Add the spectral oracle value.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Trial,
    Oracle,
    Identities,
    Fulldim,
    All,
}
