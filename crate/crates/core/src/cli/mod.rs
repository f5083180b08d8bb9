//! Command-line front end.
//!
//! Every subcommand emits either a CSV table (header row, snake_case columns)
//! or a JSON document with `params`, `results` and `residuals`. Exit codes:
//! 0 on success, 1 when a check fails, 2 for bad arguments or domain errors.

mod commands;
mod format;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::grid::GridSpec;
use crate::parton::PROTON_MASS_GEV;

pub use commands::{
    algebra_check, coherence, contract, fourier_check, plot_grid_default, squeeze_plot,
    PARSEVAL_TOL, PLOT_HALF_WIDTH, PLOT_POINTS, TRANSFORM_TOL,
};
pub use format::{fmt_sig, num, Cell, CommandOutput, Table};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "lorentz-squeeze",
    version,
    about = "Little-group algebra checks, boost contraction, and the Lorentz-squeezed oscillator"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Verify the Lorentz and little-group commutators, the E(2) correspondence,
    /// and the invariance of rest and lightlike momenta.
    AlgebraCheck {
        /// Flip the sign of one boost-generator entry; the check must then fail.
        #[arg(long)]
        corrupt: bool,
    },
    /// Tabulate how the boosted transverse rotations approach N1 and N2.
    Contract {
        #[arg(long, value_name = "F", allow_negative_numbers = true)]
        eta_max: f64,
        #[arg(long, value_name = "N")]
        steps: usize,
    },
    /// Sample the boosted oscillator in space-time and momentum-energy.
    SqueezePlot {
        /// Excitation number along z.
        #[arg(long, value_name = "N")]
        n: u32,
        #[arg(long, value_name = "F", allow_negative_numbers = true)]
        eta: f64,
        /// ZMIN:ZMAX:NZ[,TMIN:TMAX:NT]; defaults to ±3e^|eta| with 61 points per axis.
        #[arg(long, value_name = "GRID", allow_hyphen_values = true)]
        grid: Option<GridSpec>,
    },
    /// Compare the numerical Fourier transform of the boosted ground state
    /// with its analytic form.
    FourierCheck {
        #[arg(long, value_name = "F", allow_negative_numbers = true)]
        eta: f64,
        /// Momentum grid QZMIN:QZMAX:NQZ[,Q0MIN:Q0MAX:NQ0].
        #[arg(long, value_name = "GRID", allow_hyphen_values = true)]
        grid: Option<GridSpec>,
    },
    /// Time-dilation and coherence scalings for a beam of given energy.
    Coherence {
        /// Beam energy in GeV.
        #[arg(long, value_name = "F")]
        energy: f64,
        /// Particle mass in GeV (default: proton, 0.938).
        #[arg(long, value_name = "F", default_value_t = PROTON_MASS_GEV)]
        mass: f64,
    },
}

pub fn run(config: &RunConfig) -> crate::Result<CommandOutput> {
    match &config.command {
        Command::AlgebraCheck { corrupt } => Ok(algebra_check(*corrupt)),
        Command::Contract { eta_max, steps } => contract(*eta_max, *steps),
        Command::SqueezePlot { n, eta, grid } => squeeze_plot(*n, *eta, *grid),
        Command::FourierCheck { eta, grid } => fourier_check(*eta, *grid),
        Command::Coherence { energy, mass } => coherence(*energy, *mass),
    }
}

/// Parse `args`, run, write the output, and map the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let output = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = output.render(config.format);
    match &config.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if output.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
