//! `altwalk`: simulate two-dimensional quantum walks and export the data
//! behind their distributions, equivalence checks, entanglement sweeps and
//! limit law as CSV files with JSON run manifests.
//!
//! Exit codes: 0 on success, 1 when the input is invalid, 2 when a run
//! completes but a numerical tolerance is not met.

mod angle;
mod commands;
mod config;
mod output;
mod presets;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::commands::Status;

#[derive(Debug, Parser)]
#[command(name = "altwalk", version, about = "Alternate and Grover quantum walks on the square lattice")]
struct Cli {
    /// key=value file of defaults; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evolve one walk and write its spatial distribution.
    Simulate(SimulateArgs),
    /// Certify that paired alternate and Grover walks agree.
    Verify(VerifyArgs),
    /// x-y negativity of the alternate walk for one coin or a Bloch-sphere grid.
    Entangle(EntangleArgs),
    /// Limit density on a lattice plus simulated-vs-limit moment convergence.
    Limit(LimitArgs),
    /// Max-abs difference between two `x,y,p` distribution files.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// `alternate` or `grover`.
    #[arg(long)]
    pub walk: Option<String>,
    /// Coin angle in radians; accepts forms like `pi/4` or `0.3`.
    #[arg(long)]
    pub gamma: Option<String>,
    /// Initial coin preset (see README).
    #[arg(long)]
    pub init: Option<String>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Output CSV path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Manifest path; defaults to the CSV path with a `.manifest.json` suffix.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub xi: Option<u8>,
    #[arg(long)]
    pub kappa: Option<u8>,
    #[arg(long = "t-max")]
    pub t_max: Option<usize>,
    /// Alternate-walk coin; defaults to the state paired through `kappa`.
    #[arg(long)]
    pub init: Option<String>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Optional per-step residual CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EntangleArgs {
    #[arg(long)]
    pub gamma: Option<String>,
    /// Single-coin mode: initial coin preset.
    #[arg(long)]
    pub init: Option<String>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Sweep mode: number of polar angles over [0, pi], endpoints included.
    #[arg(long = "theta-points")]
    pub theta_points: Option<usize>,
    /// Sweep mode: number of azimuths 2 pi k / n.
    #[arg(long = "phi-points")]
    pub phi_points: Option<usize>,
    /// Sweep mode: a single polar angle.
    #[arg(long)]
    pub theta: Option<String>,
    /// Sweep mode: a single azimuth.
    #[arg(long)]
    pub phi: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub init: Option<String>,
    /// Cells per axis of the density lattice over [-1, 1]^2.
    #[arg(long = "grid-points")]
    pub grid_points: Option<usize>,
    /// Comma-separated ascending times, e.g. `100,200,400`.
    #[arg(long = "t-list")]
    pub t_list: Option<String>,
    /// Comma-separated moment orders `r1:r2`.
    #[arg(long)]
    pub orders: Option<String>,
    /// Even number of momentum nodes per axis for the limit moments.
    #[arg(long = "momentum-points")]
    pub momentum_points: Option<usize>,
    /// Quadrature nodes per segment for the density normalization.
    #[arg(long = "quad-points")]
    pub quad_points: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long = "convergence-out")]
    pub convergence_out: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    /// Exit with status 2 if the distance exceeds this.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("ALTWALK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow::anyhow!("ALTWALK_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    configure_threads()?;
    let config = match &cli.config {
        Some(path) => config::Config::load(path)?,
        None => config::Config::default(),
    };
    match cli.command {
        Command::Simulate(a) => commands::simulate(a, &config),
        Command::Verify(a) => commands::verify(a, &config),
        Command::Entangle(a) => commands::entangle(a, &config),
        Command::Limit(a) => commands::limit(a, &config),
        Command::Compare(a) => commands::compare(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ToleranceFailure) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
