//! Datasets behind figures 2, 3, 4 and 6.
//!
//! Each figure has a default grid; any axis can be replaced from the command line.

use thzcoex_core::atmosphere::AtmosphereProfile;
use thzcoex_core::rain::Polarization;

use crate::compute::{
    gas_sweep, rain_sweep, slant_fields, slant_header, slant_sweep, terrestrial_sweep, SlantRow,
    TerrestrialRow,
};
use crate::error::{CliError, Result};
use crate::output::{
    csv_string, fixed, DB_DECIMALS, DISTANCE_DECIMALS, FREQ_DECIMALS, GAMMA_DECIMALS, RATE_DECIMALS,
};
use crate::sweep::{Grid, SweepSpec};

pub const FIGURES: [u32; 4] = [2, 3, 4, 6];

pub const FIG2_ALTITUDES_KM: [f64; 2] = [0.0, 10.0];
pub const FIG3_RATES_MM_H: [f64; 7] = [0.25, 1.0, 4.0, 25.0, 50.0, 100.0, 150.0];
pub const FIG4_FREQUENCIES_GHZ: [f64; 4] = [165.0, 183.0, 325.0, 425.0];
pub const FIG4_ALTITUDES_KM: [f64; 3] = [400.0, 8000.0, 36000.0];
pub const FIG6_FREQUENCY_GHZ: f64 = 140.0;

/// Overrides for the default figure grids.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FigureOptions {
    pub freq_ghz: Option<Grid>,
    pub rate_mm_h: Option<Grid>,
    pub elev_deg: Option<Grid>,
    pub sat_alt_km: Option<Grid>,
    pub dist_m: Option<Grid>,
}

/// 1 to 1000 GHz in 0.5 GHz steps.
pub fn fig2_frequencies() -> Vec<f64> {
    SweepSpec::new(1.0, 1000.0, 0.5)
        .expect("static sweep")
        .values()
}

/// 1 to 1000 GHz in 1 GHz steps.
pub fn fig3_frequencies() -> Vec<f64> {
    SweepSpec::new(1.0, 1000.0, 1.0)
        .expect("static sweep")
        .values()
}

/// 0.5° then every whole degree from 1° to 90°.
pub fn fig4_elevations() -> Vec<f64> {
    std::iter::once(0.5)
        .chain((1..=90).map(f64::from))
        .collect()
}

/// 1 m to 100 km, 20 points per decade.
pub fn fig6_distances() -> Vec<f64> {
    (0..=100).map(|i| 10f64.powf(f64::from(i) / 20.0)).collect()
}

/// No rain, then the figure 3 rates.
pub fn fig6_rates() -> Vec<f64> {
    std::iter::once(0.0).chain(FIG3_RATES_MM_H).collect()
}

fn pick(grid: &Option<Grid>, default: impl FnOnce() -> Vec<f64>) -> Vec<f64> {
    grid.as_ref().map_or_else(default, Grid::values)
}

fn reject(opts: &FigureOptions, n: u32, allowed: &[&str]) -> Result<()> {
    let given = [
        ("--freq-ghz", opts.freq_ghz.is_some()),
        ("--rate-mm-h", opts.rate_mm_h.is_some()),
        ("--elev-deg", opts.elev_deg.is_some()),
        ("--sat-alt-km", opts.sat_alt_km.is_some()),
        ("--dist-m", opts.dist_m.is_some()),
    ];
    match given
        .iter()
        .find(|(flag, set)| *set && !allowed.contains(flag))
    {
        Some((flag, _)) => Err(CliError::usage(format!("figure {n} does not take {flag}"))),
        None => Ok(()),
    }
}

/// `(frequency, γ, altitude, condition)` for every curve of figure 2.
pub fn figure2_rows(freqs: &[f64]) -> Result<Vec<(f64, f64, f64, &'static str)>> {
    let mut rows = Vec::with_capacity(4 * freqs.len());
    for z in FIG2_ALTITUDES_KM {
        for (name, profile) in [
            ("standard", AtmosphereProfile::standard()),
            ("dry", AtmosphereProfile::dry()),
        ] {
            let state = profile.state_at(z)?;
            rows.extend(
                gas_sweep(freqs, &state)?
                    .into_iter()
                    .map(|(f, g)| (f, g, z, name)),
            );
        }
    }
    Ok(rows)
}

pub fn figure4_rows(
    freqs: &[f64],
    altitudes_km: &[f64],
    elevations_deg: &[f64],
) -> Result<Vec<SlantRow>> {
    slant_sweep(
        freqs,
        altitudes_km,
        elevations_deg,
        &AtmosphereProfile::standard(),
    )
}

/// Figure 6 rows, rates varying slowest.
pub fn figure6_rows(distances_m: &[f64], rates: &[f64]) -> Result<Vec<TerrestrialRow>> {
    terrestrial_sweep(
        &[FIG6_FREQUENCY_GHZ],
        distances_m,
        rates,
        &AtmosphereProfile::standard(),
        Polarization::Horizontal,
    )
}

/// The CSV dataset behind figure `n`.
pub fn figure_csv(n: u32, opts: &FigureOptions) -> Result<String> {
    match n {
        2 => {
            reject(opts, n, &["--freq-ghz"])?;
            let rows = figure2_rows(&pick(&opts.freq_ghz, fig2_frequencies))?;
            Ok(csv_string(
                &[
                    "frequency_ghz",
                    "gamma_db_per_km",
                    "altitude_km",
                    "condition",
                ],
                rows.iter().map(|&(f, g, z, c)| {
                    vec![
                        fixed(f, FREQ_DECIMALS),
                        fixed(g, GAMMA_DECIMALS),
                        fixed(z, DISTANCE_DECIMALS),
                        c.to_string(),
                    ]
                }),
            ))
        }
        3 => {
            reject(opts, n, &["--freq-ghz", "--rate-mm-h"])?;
            let freqs = pick(&opts.freq_ghz, fig3_frequencies);
            let rates = pick(&opts.rate_mm_h, || FIG3_RATES_MM_H.to_vec());
            let rows = rain_sweep(&freqs, &rates, Polarization::Horizontal)?;
            Ok(csv_string(
                &["frequency_ghz", "rate_mm_h", "gamma_db_per_km"],
                rows.iter().map(|&(f, r, g)| {
                    vec![
                        fixed(f, FREQ_DECIMALS),
                        fixed(r, RATE_DECIMALS),
                        fixed(g, GAMMA_DECIMALS),
                    ]
                }),
            ))
        }
        4 => {
            reject(opts, n, &["--freq-ghz", "--sat-alt-km", "--elev-deg"])?;
            let rows = figure4_rows(
                &pick(&opts.freq_ghz, || FIG4_FREQUENCIES_GHZ.to_vec()),
                &pick(&opts.sat_alt_km, || FIG4_ALTITUDES_KM.to_vec()),
                &pick(&opts.elev_deg, fig4_elevations),
            )?;
            Ok(csv_string(&slant_header(), rows.iter().map(slant_fields)))
        }
        6 => {
            reject(opts, n, &["--rate-mm-h", "--dist-m"])?;
            let rows = figure6_rows(
                &pick(&opts.dist_m, fig6_distances),
                &pick(&opts.rate_mm_h, fig6_rates),
            )?;
            Ok(csv_string(
                &[
                    "distance_m",
                    "fspl_db",
                    "gas_db",
                    "rain_db",
                    "total_db",
                    "rate_mm_h",
                ],
                rows.iter().map(|r| {
                    vec![
                        fixed(r.distance_m, DISTANCE_DECIMALS),
                        fixed(r.loss.fspl_db(), DB_DECIMALS),
                        fixed(r.loss.gas_db(), DB_DECIMALS),
                        fixed(r.loss.rain_db(), DB_DECIMALS),
                        fixed(r.loss.total_db(), DB_DECIMALS),
                        fixed(r.rate_mm_h, RATE_DECIMALS),
                    ]
                }),
            ))
        }
        other => Err(CliError::usage(format!(
            "no dataset for figure {other}; available: 2, 3, 4, 6"
        ))),
    }
}
