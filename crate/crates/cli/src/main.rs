//! Command-line front end for copy-scaling measures.
//!
//! Exit codes are stable so shell pipelines can branch on them:
//! 0 success (and `check`: consistent-with-1S), 1 `check` refuted the
//! measure (not-1S), 2 parse/config failure, 3 degree-law overflow,
//! 4 state validation failure.

mod cmd;
mod output;

use clap::{Parser, Subcommand};
use output::OutputFormat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "onescale", version, about = "Copy-scaling laws for quantum resource measures")]
struct Cli {
    /// Output format (figures are always CSV)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// RNG seed (gen-state; overrides the config seed in check)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Residual tolerance override for check
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Also require positive semidefiniteness when reading state files
    #[arg(long, global = true)]
    strict_psd: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a seed series to a^n copies via the coefficient recurrence
    Expand {
        /// Base copy count a of the seed
        #[arg(long)]
        base: u32,
        /// Seed coefficients d_1,d_2,...: rationals like 2,-1/2 run the
        /// exact pipeline, anything with a decimal point runs in floats
        #[arg(long)]
        coeffs: String,
        /// Exponent n (expand to N = a^n copies)
        #[arg(long)]
        n: u32,
        /// Keep only the first T coefficients
        #[arg(long)]
        truncation: Option<usize>,
    },
    /// Coherence of a state file, with optional N-copy closed form + oracle
    Coherence {
        /// State file (JSON or CSV)
        #[arg(long)]
        state: PathBuf,
        /// Which norm: l1 or l2
        #[arg(long)]
        norm: String,
        /// Copy count for the N-copy values
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run a scalability suite from a JSON config
    Check {
        /// Suite configuration file
        #[arg(long)]
        config: PathBuf,
    },
    /// Nonlinearity-amplification curves E3/E9/E27 as CSV
    Fig1 {
        /// Seed nonlinearity delta (coefficients are 3, 3*delta, 3*delta^2)
        #[arg(long, default_value_t = 0.08)]
        delta: f64,
        /// Right end of the evaluation grid
        #[arg(long = "e-max", default_value_t = 1.0)]
        e_max: f64,
        /// Number of grid points
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Per-copy l1 coherence growth as CSV
    Fig2 {
        /// Single-copy coherence values, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.05, 0.08, 0.1])]
        c: Vec<f64>,
        /// Largest copy count
        #[arg(long = "n-max", default_value_t = 64)]
        n_max: u32,
        /// Restrict the grid to powers of two
        #[arg(long)]
        powers_of_two: bool,
    },
    /// Generate a random state file (JSON, or CSV with --format csv)
    GenState {
        /// Hilbert-space dimension
        #[arg(long)]
        dim: usize,
        /// pure or mixed
        #[arg(long)]
        kind: String,
    },
}

/// A failed command: message plus the exit code it maps to.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<onescale::SeriesError> for Failure {
    fn from(err: onescale::SeriesError) -> Self {
        let code = match err {
            onescale::SeriesError::DegreeOverflow { .. } => 3,
            _ => 2,
        };
        Self { code, message: err.to_string() }
    }
}

impl From<onescale::StateError> for Failure {
    fn from(err: onescale::StateError) -> Self {
        use onescale::StateError::*;
        let code = match err {
            Parse(_) | Io(_) => 2,
            NotSquare { .. } | DimensionTooSmall(_) | NotHermitian { .. } | TraceNotOne(_)
            | NotPositiveSemidefinite(_) => 4,
            _ => 2,
        };
        Self { code, message: err.to_string() }
    }
}

impl From<onescale::HarnessError> for Failure {
    fn from(err: onescale::HarnessError) -> Self {
        match err {
            onescale::HarnessError::State(e) => e.into(),
            other => Self { code: 2, message: other.to_string() },
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Self { code: 2, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let sink = output::Sink::new(cli.output.clone());
    let result = match &cli.command {
        Command::Expand { base, coeffs, n, truncation } => {
            cmd::expand::run(&sink, cli.format, *base, coeffs, *n, *truncation)
        }
        Command::Coherence { state, norm, n } => {
            cmd::coherence::run(&sink, cli.format, state, norm, *n, cli.strict_psd)
        }
        Command::Check { config } => {
            cmd::check::run(&sink, cli.format, config, cli.tolerance, cli.seed)
        }
        Command::Fig1 { delta, e_max, points } => cmd::figures::fig1(&sink, *delta, *e_max, *points),
        Command::Fig2 { c, n_max, powers_of_two } => {
            cmd::figures::fig2(&sink, c, *n_max, *powers_of_two)
        }
        Command::GenState { dim, kind } => {
            cmd::gen_state::run(&sink, cli.format, *dim, kind, cli.seed.unwrap_or(0))
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
