//! Command-line front end for `thzcoex-core`.
//!
//! [`run`] parses an argument vector, runs one subcommand and writes its
//! CSV or table output. Exit codes: 0 success, 1 domain error (a value out of
//! a model's range), 2 usage or input-format error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
pub mod compute;
pub mod config;
mod error;
pub mod figures;
pub mod fit_io;
pub mod output;
pub mod shadow;
pub mod sweep;

pub use error::{CliError, Result};

use sweep::{Grid, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "thzcoex",
    version,
    about = "Propagation and coexistence budgets above 100 GHz"
)]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Atmosphere {
    Standard,
    Dry,
}

#[derive(Debug, Clone, Args)]
struct AtmosphereArgs {
    /// Reference atmosphere preset.
    #[arg(long, value_enum, default_value_t = Atmosphere::Standard)]
    atmosphere: Atmosphere,
    /// Surface water-vapour density, g/m³. Overrides the preset's value.
    #[arg(long, value_name = "G_PER_M3")]
    surface_vapor: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pol {
    #[value(name = "h", alias = "horizontal")]
    Horizontal,
    #[value(name = "v", alias = "vertical")]
    Vertical,
    #[value(name = "c", alias = "circular")]
    Circular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Specific gaseous attenuation at one altitude.
    Gas {
        /// Frequencies, GHz: a value, a start:stop:step sweep, or a comma list of either.
        #[arg(long, value_name = "GRID")]
        freq_ghz: Grid,
        #[arg(long, default_value_t = 0.0, value_name = "KM")]
        altitude_km: f64,
        #[command(flatten)]
        atmosphere: AtmosphereArgs,
    },
    /// Local maxima of the gaseous attenuation spectrum.
    Peaks {
        /// Scan range and grid step, GHz.
        #[arg(long, value_name = "START:STOP:STEP", default_value = "1:1000:0.5")]
        freq_ghz: SweepSpec,
        #[arg(long, default_value_t = 0.0, value_name = "KM")]
        altitude_km: f64,
        #[command(flatten)]
        atmosphere: AtmosphereArgs,
    },
    /// Specific rain attenuation.
    Rain {
        #[arg(long, value_name = "GRID")]
        freq_ghz: Grid,
        #[arg(long, value_name = "GRID")]
        rate_mm_h: Grid,
        #[arg(long, value_enum, default_value_t = Pol::Horizontal)]
        pol: Pol,
    },
    /// Ground-to-satellite free-space plus gaseous loss.
    Slant {
        #[arg(long, value_name = "GRID")]
        freq_ghz: Grid,
        #[arg(long, value_name = "GRID")]
        sat_alt_km: Grid,
        #[arg(long, value_name = "GRID")]
        elev_deg: Grid,
        #[command(flatten)]
        atmosphere: AtmosphereArgs,
    },
    /// Horizontal sea-level link loss with gas and rain.
    Terrestrial {
        #[arg(long, value_name = "GRID")]
        freq_ghz: Grid,
        #[arg(long, value_name = "GRID")]
        dist_m: Grid,
        #[arg(long, value_name = "GRID", default_value = "0")]
        rate_mm_h: Grid,
        #[arg(long, value_enum, default_value_t = Pol::Horizontal)]
        pol: Pol,
        #[command(flatten)]
        atmosphere: AtmosphereArgs,
    },
    /// Itemised ground-to-satellite link budget and received power.
    NtnBudget(NtnBudgetArgs),
    /// Interference from ground emitters into a satellite radiometer.
    Coexist {
        /// Scenario file of `key = value` lines.
        #[arg(long, value_name = "FILE")]
        config: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Mean excess loss over free space from measured links.
    Fit {
        /// CSV with header distance_m,tx_power_dbm,tx_gain_dbi,rx_gain_dbi,rx_power_dbm,frequency_ghz.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Dataset behind figure 2, 3, 4 or 6.
    Figure {
        number: u32,
        #[arg(long, value_name = "GRID")]
        freq_ghz: Option<Grid>,
        #[arg(long, value_name = "GRID")]
        rate_mm_h: Option<Grid>,
        #[arg(long, value_name = "GRID")]
        elev_deg: Option<Grid>,
        #[arg(long, value_name = "GRID")]
        sat_alt_km: Option<Grid>,
        #[arg(long, value_name = "GRID")]
        dist_m: Option<Grid>,
    },
}

#[derive(Debug, Clone, Args)]
struct NtnBudgetArgs {
    #[arg(long)]
    freq_ghz: f64,
    #[arg(long, value_name = "KM")]
    sat_alt_km: f64,
    #[arg(long, value_name = "DEG")]
    elev_deg: f64,
    #[arg(long, value_name = "DBM")]
    tx_power_dbm: f64,
    #[arg(long, default_value_t = 0.0, value_name = "DBI")]
    tx_gain_dbi: f64,
    /// Satellite receive gain. The 0 dBi default ignores the real antenna gain.
    #[arg(long, default_value_t = 0.0, value_name = "DBI")]
    rx_gain_dbi: f64,
    #[arg(long, default_value_t = 0.0, value_name = "DB")]
    shadow_fading_db: f64,
    #[arg(long, default_value_t = 0.0, value_name = "DB")]
    clutter_loss_db: f64,
    #[arg(long, default_value_t = 0.0, value_name = "DB")]
    scintillation_db: f64,
    /// Line of sight to the satellite: clutter loss is dropped.
    #[arg(long)]
    los: bool,
    /// Use this gas attenuation instead of the computed slant integral.
    #[arg(long, value_name = "DB")]
    gas_db: Option<f64>,
    /// Draw shadow fading from a zero-mean normal with this spread (dB). Needs --seed.
    #[arg(
        long,
        value_name = "DB",
        requires = "seed",
        conflicts_with = "shadow_fading_db"
    )]
    shadow_sigma_db: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of shadow-fading draws (CSV output only).
    #[arg(long, default_value_t = 1, requires = "shadow_sigma_db")]
    draws: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(flatten)]
    atmosphere: AtmosphereArgs,
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                2
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    let result =
        commands::execute(&cli.command).and_then(|text| emit(&text, cli.out.as_ref(), stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}
