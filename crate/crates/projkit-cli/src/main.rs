mod problem;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use projkit::Tolerances;

use crate::problem::ProblemKind;

#[derive(Parser)]
#[command(
    name = "projkit",
    version,
    about = "Exact projections onto intersections of affine subspaces and hyperplanes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "affine_hyperplane")]
    AffineHyperplane,
    #[value(name = "two_hyperplanes")]
    TwoHyperplanes,
    #[value(name = "linear_system")]
    LinearSystem,
}

impl From<KindArg> for ProblemKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::AffineHyperplane => ProblemKind::AffineHyperplane,
            KindArg::TwoHyperplanes => ProblemKind::TwoHyperplanes,
            KindArg::LinearSystem => ProblemKind::LinearSystem,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Project the query point of a problem file and print the fired case,
    /// the projected point, gap data and diagnostic scalars.
    Project {
        input: PathBuf,
        #[arg(long)]
        tol_rank: Option<f64>,
        #[arg(long)]
        tol_feas: Option<f64>,
    },
    /// Print the gap vector between the affine subspace and the hyperplane
    /// of an affine_hyperplane problem file.
    Gap {
        input: PathBuf,
        #[arg(long)]
        tol_rank: Option<f64>,
        #[arg(long)]
        tol_feas: Option<f64>,
    },
    /// Classify the pair of a two_hyperplanes problem file.
    Classify {
        input: PathBuf,
        #[arg(long)]
        tol_rank: Option<f64>,
        #[arg(long)]
        tol_feas: Option<f64>,
    },
    /// Run the cyclic-projection convergence experiment and write a CSV
    /// table with one row per iteration index.
    Experiment {
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, default_value_t = 50)]
        cols: usize,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 100)]
        starts: usize,
        #[arg(long, default_value_t = 50)]
        iters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        tol_rank: Option<f64>,
        #[arg(long)]
        tol_feas: Option<f64>,
    },
    /// Write a sample problem file of the given kind (stdout by default).
    Example {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit codes: mathematical outcomes (any trichotomy case, infeasibility,
/// empty intersections) exit 0; parse and read failures exit 2; dimension
/// mismatches exit 3; unwritable output exits 4.
#[derive(Debug)]
enum CliError {
    Parse(String),
    Dimension(String),
    Output(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Parse(_) => ExitCode::from(2),
            CliError::Dimension(_) => ExitCode::from(3),
            CliError::Output(_) => ExitCode::from(4),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Dimension(m) | CliError::Output(m) => m,
        }
    }
}

impl From<projkit::Error> for CliError {
    fn from(err: projkit::Error) -> Self {
        match err {
            projkit::Error::DimensionMismatch { .. } => CliError::Dimension(err.to_string()),
            other => CliError::Parse(other.to_string()),
        }
    }
}

fn tolerances(tol_rank: Option<f64>, tol_feas: Option<f64>) -> Result<Tolerances, CliError> {
    let defaults = Tolerances::default();
    Tolerances::new(
        defaults.tol_orth,
        tol_rank.unwrap_or(defaults.tol_rank),
        tol_feas.unwrap_or(defaults.tol_feas),
    )
    .map_err(CliError::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Project {
            input,
            tol_rank,
            tol_feas,
        } => tolerances(tol_rank, tol_feas).and_then(|tol| report::cmd_project(&input, &tol)),
        Command::Gap {
            input,
            tol_rank,
            tol_feas,
        } => tolerances(tol_rank, tol_feas).and_then(|tol| report::cmd_gap(&input, &tol)),
        Command::Classify {
            input,
            tol_rank,
            tol_feas,
        } => tolerances(tol_rank, tol_feas).and_then(|tol| report::cmd_classify(&input, &tol)),
        Command::Experiment {
            rows,
            cols,
            instances,
            starts,
            iters,
            seed,
            out,
            tol_rank,
            tol_feas,
        } => tolerances(tol_rank, tol_feas).and_then(|tol| {
            report::cmd_experiment(rows, cols, instances, starts, iters, seed, &out, &tol)
        }),
        Command::Example { kind, out } => report::cmd_example(kind.into(), out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}
