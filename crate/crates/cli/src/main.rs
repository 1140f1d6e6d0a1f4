//! `oic`: CSV-emitting frontend for secondary-link rate analysis under
//! primary interference.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors, 1 on internal
//! errors. Every command is deterministic given its full argument set
//! (including the seed, where one applies).

mod commands;
mod input;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use oic_core::LinearSnr;

use input::{parse_grid, snr_arg};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn usage(msg: String) -> Self {
        CliError::Usage(msg)
    }

    fn internal(msg: String) -> Self {
        CliError::Internal(msg)
    }

    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Internal(_) => ExitCode::from(1),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Internal(msg) => f.write_str(msg),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "oic",
    version,
    about = "Secondary-link rates under primary interference: \
             rate curves, energy allocation, distance scenarios, Monte-Carlo studies",
    after_help = "SNR-like values require a unit suffix: `20dB` or `100lin`. \
                  Output is CSV with `#` metadata lines, written to stdout unless --output is given."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rate-adaptation curve over a secondary-SNR grid
    RateCurve {
        /// Primary SNR at the secondary receiver (e.g. 20lin or 13dB)
        #[arg(long, value_parser = snr_arg)]
        gamma_p: LinearSnr,
        /// Minimum SNR at which the primary rate is decodable
        #[arg(long, value_parser = snr_arg)]
        beta_p: LinearSnr,
        /// Secondary-SNR grid as <start>:<stop>:<count>, bounds unit-suffixed
        #[arg(long)]
        grid: String,
        /// Output file (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Energy allocation across the channels of a channels file
    Allocate {
        /// Total energy budget (normalized, unitless)
        #[arg(long)]
        total: f64,
        /// Channels file: one `nu gamma_p beta_p` triple per line, unit-suffixed
        #[arg(long)]
        channels: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Rates along the normalized distance from the primary transmitter
    Line {
        /// Primary SNR at its cell edge (x = 1)
        #[arg(long, value_parser = snr_arg)]
        beta_p: LinearSnr,
        /// Propagation coefficient
        #[arg(long)]
        v: f64,
        /// Secondary SNR, held fixed along the sweep
        #[arg(long, value_parser = snr_arg)]
        gamma_s: LinearSnr,
        #[arg(long)]
        x_min: f64,
        #[arg(long)]
        x_max: f64,
        #[arg(long)]
        points: usize,
        /// Also emit required-SNR and power-gap columns for this rate [bps/Hz]
        #[arg(long)]
        target_rate: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Required-power gap to reach a target rate, versus distance
    PowerGap {
        /// Target secondary rate [bps/Hz]
        #[arg(long)]
        target_rate: f64,
        #[arg(long, value_parser = snr_arg)]
        beta_p: LinearSnr,
        #[arg(long)]
        v: f64,
        #[arg(long)]
        x_min: f64,
        #[arg(long)]
        x_max: f64,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Monte-Carlo multi-channel study from a config file
    Mc {
        /// Config file with channels, means, iterations, energy_grid, seed
        #[arg(long)]
        config: PathBuf,
        /// Worker threads (affects speed only, never the numbers)
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (csv, output) = match cli.command {
        Command::RateCurve {
            gamma_p,
            beta_p,
            grid,
            output,
        } => {
            let grid = parse_grid(&grid)?;
            (commands::rate_curve(gamma_p, beta_p, &grid)?, output)
        }
        Command::Allocate {
            total,
            channels,
            output,
        } => (commands::allocate(total, &channels)?, output),
        Command::Line {
            beta_p,
            v,
            gamma_s,
            x_min,
            x_max,
            points,
            target_rate,
            output,
        } => {
            let args = commands::LineArgs {
                beta_p,
                v,
                gamma_s,
                x_min,
                x_max,
                points,
                target_rate,
            };
            (commands::line(&args)?, output)
        }
        Command::PowerGap {
            target_rate,
            beta_p,
            v,
            x_min,
            x_max,
            points,
            output,
        } => (
            commands::power_gap(target_rate, beta_p, v, x_min, x_max, points)?,
            output,
        ),
        Command::Mc {
            config,
            threads,
            output,
        } => (commands::mc(&config, threads)?, output),
    };
    output::emit(output.as_deref(), &csv)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
