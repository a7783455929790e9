//! `gegmra`: filter design, spectral reports, decomposition, fault
//! simulation, analysis and catalog sweeps from the command line.

mod commands;
mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gegmra::pipeline::DetectionSignal;
use thiserror::Error;

use config::RunConfig;

#[derive(Parser, Debug)]
#[command(
    name = "gegmra",
    version,
    about = "Gegenbauer filter banks and single-ended fault location"
)]
struct Cli {
    /// Output directory [default: config `out_dir`, then $GEGMRA_OUT_DIR, then .]
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// JSON run configuration; flags take precedence over it
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write scaling and wavelet coefficients (CSV and JSON)
    Design {
        /// geg:<nu>:<alpha>, daub4 or haar
        filter: String,
    },
    /// Write sampled frequency responses of both filters
    Response {
        filter: String,
        #[arg(long, default_value_t = 1024)]
        grid: usize,
    },
    /// Write the per-level band table (JSON); `ideal` gives the ideal halving bands
    Bands {
        filter: String,
        #[arg(long, default_value_t = 7)]
        levels: usize,
        /// Sample rate in Hz
        #[arg(long)]
        fs: Option<f64>,
    },
    /// Write scaling and wavelet waveforms from the cascade algorithm
    Cascade {
        filter: String,
        #[arg(long, default_value_t = 8)]
        iterations: usize,
    },
    /// Decompose one channel of a record
    Decompose {
        record: PathBuf,
        #[arg(long, default_value = "geg:3:12")]
        filter: String,
        #[arg(long, default_value_t = 3)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = Channel::Va)]
        channel: Channel,
    },
    /// Generate a terminal-A record for one bolted (or resistive) fault
    Simulate(SimulateArgs),
    /// Detect, classify and locate the fault in a record
    Analyze(AnalyzeArgs),
    /// Run a scenario catalog (JSON list, or `paper` for the 90-case set)
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// Fault type, e.g. Ag, BC, ABg, ABC
    #[arg(long = "type")]
    fault_type: String,
    /// Fault position as a fraction of line length
    #[arg(long)]
    at: f64,
    /// Fault instant in cycles from the record start
    #[arg(long)]
    inception: f64,
    /// Fault resistance in ohms
    #[arg(long, default_value_t = 0.0)]
    rf: f64,
    #[arg(long)]
    id: Option<String>,
}

#[derive(Args, Debug)]
struct PipelineFlags {
    #[arg(long, value_enum)]
    detection: Option<Detection>,
    /// Multiple of the pre-fault detail maximum used as threshold
    #[arg(long)]
    threshold: Option<f64>,
    /// Decomposition level the phasors are taken from
    #[arg(long)]
    levels: Option<usize>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    record: PathBuf,
    #[arg(long, default_value = "geg:3:12")]
    filter: String,
    /// True fault distance in km, enables error reporting
    #[arg(long)]
    truth: Option<f64>,
    /// Skip classification and use this fault type
    #[arg(long = "type")]
    fault_type: Option<String>,
    #[command(flatten)]
    pipeline: PipelineFlags,
}

#[derive(Args, Debug)]
struct SweepArgs {
    catalog: String,
    #[arg(long, default_value = "daub4,geg:3:1,geg:3:12", value_delimiter = ',')]
    filters: Vec<String>,
    #[command(flatten)]
    pipeline: PipelineFlags,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Detection {
    Raw,
    Superimposed,
}

impl From<Detection> for DetectionSignal {
    fn from(d: Detection) -> Self {
        match d {
            Detection::Raw => DetectionSignal::Raw,
            Detection::Superimposed => DetectionSignal::Superimposed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Channel {
    Va,
    Vb,
    Vc,
    Ia,
    Ib,
    Ic,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gegmra::Error),
    #[error("{}: {reason}", path.display())]
    Io { path: PathBuf, reason: String },
    #[error("config {}: {reason}", path.display())]
    Config { path: PathBuf, reason: String },
    #[error("--{flag} {value}: {reason}")]
    Value {
        flag: &'static str,
        value: String,
        reason: String,
    },
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            reason: e.to_string(),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = RunConfig::load(cli.config.as_deref())?;
    let out = cfg.output_dir(cli.out.as_deref());
    let ctx = commands::Context { cfg, out };
    match cli.command {
        Command::Design { filter } => commands::design(&ctx, &filter),
        Command::Response { filter, grid } => commands::response(&ctx, &filter, grid),
        Command::Bands { filter, levels, fs } => commands::bands(&ctx, &filter, levels, fs),
        Command::Cascade { filter, iterations } => commands::cascade(&ctx, &filter, iterations),
        Command::Decompose {
            record,
            filter,
            levels,
            channel,
        } => commands::decompose(&ctx, &record, &filter, levels, channel),
        Command::Simulate(a) => commands::simulate(&ctx, &a),
        Command::Analyze(a) => commands::analyze(&ctx, &a),
        Command::Sweep(a) => commands::sweep(&ctx, &a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace(['\n', '\r'], " ");
            eprintln!("gegmra: {msg}");
            ExitCode::from(1)
        }
    }
}
