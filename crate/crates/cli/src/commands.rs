use std::path::Path;

use thzcoex_core::atmosphere::AtmosphereProfile;
use thzcoex_core::coexistence::{
    interference_threshold, max_devices, AntennaPattern, RadiometerSpec,
};
use thzcoex_core::fit::fit_excess_loss;
use thzcoex_core::gas::{find_absorption_peaks, specific_gas_attenuation};
use thzcoex_core::ntn::{ntn_path_loss, received_power, NtnLinkConfig, TransmitterSpec};
use thzcoex_core::path::{PathLossBreakdown, MIN_ELEVATION_DEG};
use thzcoex_core::rain::Polarization;
use thzcoex_core::units::Decibel;

use crate::compute::{
    breakdown_fields, gas_sweep, ghz, rain_sweep, slant_fields, slant_header, slant_sweep,
    terrestrial_fields, terrestrial_header, terrestrial_sweep, BREAKDOWN_COLUMNS,
};
use crate::config::ScenarioConfig;
use crate::error::{CliError, Result};
use crate::figures::{figure_csv, FigureOptions};
use crate::fit_io::parse_measurements;
use crate::output::{
    csv_string, fixed, table, ANGLE_DECIMALS, DB_DECIMALS, DISTANCE_DECIMALS, FREQ_DECIMALS,
    GAMMA_DECIMALS, TABLE_DB_DECIMALS,
};
use crate::{Atmosphere, AtmosphereArgs, Command, Format, NtnBudgetArgs, Pol};

pub(crate) fn execute(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Gas {
            freq_ghz,
            altitude_km,
            atmosphere,
        } => {
            let state = profile(atmosphere)?.state_at(*altitude_km)?;
            let rows = gas_sweep(&freq_ghz.values(), &state)?;
            Ok(csv_string(
                &["frequency_ghz", "gamma_db_per_km"],
                rows.iter()
                    .map(|&(f, g)| vec![fixed(f, FREQ_DECIMALS), fixed(g, GAMMA_DECIMALS)]),
            ))
        }
        Command::Peaks {
            freq_ghz,
            altitude_km,
            atmosphere,
        } => {
            let state = profile(atmosphere)?.state_at(*altitude_km)?;
            let peaks = find_absorption_peaks(
                ghz(freq_ghz.start())?,
                ghz(freq_ghz.stop())?,
                &state,
                freq_ghz.step(),
            )?;
            let rows = peaks
                .iter()
                .map(|&f| {
                    let g = specific_gas_attenuation(f, &state)?.db_per_km();
                    Ok(vec![
                        fixed(f.ghz(), FREQ_DECIMALS),
                        fixed(g, GAMMA_DECIMALS),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(csv_string(&["peak_ghz", "gamma_db_per_km"], rows))
        }
        Command::Rain {
            freq_ghz,
            rate_mm_h,
            pol,
        } => {
            let rows = rain_sweep(&freq_ghz.values(), &rate_mm_h.values(), polarization(*pol))?;
            Ok(csv_string(
                &["frequency_ghz", "rate_mm_h", "gamma_db_per_km"],
                rows.iter().map(|&(f, r, g)| {
                    vec![
                        fixed(f, FREQ_DECIMALS),
                        fixed(r, crate::output::RATE_DECIMALS),
                        fixed(g, GAMMA_DECIMALS),
                    ]
                }),
            ))
        }
        Command::Slant {
            freq_ghz,
            sat_alt_km,
            elev_deg,
            atmosphere,
        } => {
            let rows = slant_sweep(
                &freq_ghz.values(),
                &sat_alt_km.values(),
                &elev_deg.values(),
                &profile(atmosphere)?,
            )?;
            Ok(csv_string(&slant_header(), rows.iter().map(slant_fields)))
        }
        Command::Terrestrial {
            freq_ghz,
            dist_m,
            rate_mm_h,
            pol,
            atmosphere,
        } => {
            let rows = terrestrial_sweep(
                &freq_ghz.values(),
                &dist_m.values(),
                &rate_mm_h.values(),
                &profile(atmosphere)?,
                polarization(*pol),
            )?;
            Ok(csv_string(
                &terrestrial_header(),
                rows.iter().map(terrestrial_fields),
            ))
        }
        Command::NtnBudget(args) => ntn_budget(args),
        Command::Coexist { config, format } => coexist(config, *format),
        Command::Fit { input, format } => fit(input, *format),
        Command::Figure {
            number,
            freq_ghz,
            rate_mm_h,
            elev_deg,
            sat_alt_km,
            dist_m,
        } => figure_csv(
            *number,
            &FigureOptions {
                freq_ghz: freq_ghz.clone(),
                rate_mm_h: rate_mm_h.clone(),
                elev_deg: elev_deg.clone(),
                sat_alt_km: sat_alt_km.clone(),
                dist_m: dist_m.clone(),
            },
        ),
    }
}

fn profile(args: &AtmosphereArgs) -> Result<AtmosphereProfile> {
    Ok(match (args.surface_vapor, args.atmosphere) {
        (Some(w), _) => AtmosphereProfile::reference(w)?,
        (None, Atmosphere::Standard) => AtmosphereProfile::standard(),
        (None, Atmosphere::Dry) => AtmosphereProfile::dry(),
    })
}

fn named_profile(name: &str) -> Option<AtmosphereProfile> {
    match name {
        "standard" => Some(AtmosphereProfile::standard()),
        "dry" => Some(AtmosphereProfile::dry()),
        _ => None,
    }
}

fn polarization(p: Pol) -> Polarization {
    match p {
        Pol::Horizontal => Polarization::Horizontal,
        Pol::Vertical => Polarization::Vertical,
        Pol::Circular => Polarization::Circular,
    }
}

fn db(x: f64) -> String {
    format!("{} dB", fixed(x, TABLE_DB_DECIMALS))
}

fn dbm(x: f64) -> String {
    format!("{} dBm", fixed(x, TABLE_DB_DECIMALS))
}

fn ledger_table(pl: &PathLossBreakdown) -> Vec<(&'static str, String)> {
    vec![
        ("Free-space loss", db(pl.fspl_db())),
        ("Gas attenuation", db(pl.gas_db())),
        ("Rain attenuation", db(pl.rain_db())),
        ("Clutter loss", db(pl.clutter_db())),
        ("Shadow fading", db(pl.shadow_db())),
        ("Scintillation", db(pl.scintillation_db())),
        ("Total path loss", db(pl.total_db())),
    ]
}

fn ntn_budget(a: &NtnBudgetArgs) -> Result<String> {
    let base = NtnLinkConfig {
        frequency: ghz(a.freq_ghz)?,
        h_sat_km: a.sat_alt_km,
        elevation_deg: a.elev_deg,
        shadow_fading_db: a.shadow_fading_db,
        clutter_loss_db: a.clutter_loss_db,
        scintillation_db: a.scintillation_db,
        profile: profile(&a.atmosphere)?,
    };
    let base = if a.los {
        base.with_line_of_sight()
    } else {
        base
    };
    let tx = TransmitterSpec::new(a.tx_power_dbm, a.tx_gain_dbi)?;

    let shadows = match a.shadow_sigma_db {
        Some(sigma) => {
            let seed = a
                .seed
                .ok_or_else(|| CliError::usage("--shadow-sigma-db needs --seed"))?;
            crate::shadow::shadow_fading_draws(sigma, seed, a.draws as usize)?
        }
        None => vec![a.shadow_fading_db],
    };
    if shadows.len() > 1 && a.format == Format::Table {
        return Err(CliError::usage("--draws above 1 needs --format csv"));
    }

    let mut pl = ntn_path_loss(&base)?;
    if let Some(g) = a.gas_db {
        pl = pl.with_gas_db(g)?;
    }
    let budgets = shadows
        .iter()
        .map(|&sf| {
            let pl = pl.with_shadow_db(sf)?;
            Ok((pl, received_power(&tx, &pl, a.rx_gain_dbi)?))
        })
        .collect::<Result<Vec<(PathLossBreakdown, Decibel)>>>()?;

    match a.format {
        Format::Table => {
            let (pl, rx) = &budgets[0];
            let mut rows = vec![
                (
                    "Frequency",
                    format!("{} GHz", fixed(a.freq_ghz, FREQ_DECIMALS)),
                ),
                (
                    "Satellite altitude",
                    format!("{} km", fixed(a.sat_alt_km, 1)),
                ),
                (
                    "Elevation",
                    format!("{} deg", fixed(a.elev_deg, ANGLE_DECIMALS)),
                ),
            ];
            rows.extend(ledger_table(pl));
            rows.push(("EIRP", dbm(tx.eirp_dbm())));
            rows.push((
                "Receive gain",
                format!("{} dBi", fixed(a.rx_gain_dbi, TABLE_DB_DECIMALS)),
            ));
            rows.push(("Received power", dbm(rx.value())));
            Ok(table(&rows))
        }
        Format::Csv => {
            let mut header = vec!["frequency_ghz", "sat_alt_km", "elevation_deg"];
            header.extend(BREAKDOWN_COLUMNS);
            header.extend(["eirp_dbm", "rx_gain_dbi", "received_power_dbm"]);
            Ok(csv_string(
                &header,
                budgets.iter().map(|(pl, rx)| {
                    let mut v = vec![
                        fixed(a.freq_ghz, FREQ_DECIMALS),
                        fixed(a.sat_alt_km, DISTANCE_DECIMALS),
                        fixed(a.elev_deg, ANGLE_DECIMALS),
                    ];
                    v.extend(breakdown_fields(pl));
                    v.extend([
                        fixed(tx.eirp_dbm(), DB_DECIMALS),
                        fixed(a.rx_gain_dbi, DB_DECIMALS),
                        fixed(rx.value(), DB_DECIMALS),
                    ]);
                    v
                }),
            ))
        }
    }
}

/// Keys accepted in a `coexist` scenario file.
pub const COEXIST_KEYS: &[&str] = &[
    "freq_ghz",
    "sat_alt_km",
    "sat_elev_deg",
    "tx_power_dbm",
    "tx_gain_dbi",
    "tx_hpbw_deg",
    "sidelobe_floor_dbi",
    "pointing_elev_deg",
    "delta_t_kelvin",
    "bandwidth_hz",
    "margin_db",
    "atmosphere",
    "surface_vapor",
    "rx_gain_dbi",
    "clutter_loss_db",
    "shadow_fading_db",
    "scintillation_db",
    "gas_db",
];

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn coexist(path: &Path, format: Format) -> Result<String> {
    let cfg = ScenarioConfig::parse(&read(path)?, COEXIST_KEYS)?;
    let sat_elev = cfg.require_f64("sat_elev_deg")?;
    let pointing = cfg.f64_or("pointing_elev_deg", sat_elev)?;
    let mut atmosphere = match cfg.get_str("atmosphere") {
        None => AtmosphereProfile::standard(),
        Some(name) => {
            named_profile(name).ok_or_else(|| cfg.bad_value("atmosphere", "`standard` or `dry`"))?
        }
    };
    if let Some(w) = cfg.get_f64("surface_vapor")? {
        atmosphere = AtmosphereProfile::reference(w)?;
    }
    let link = NtnLinkConfig {
        frequency: ghz(cfg.require_f64("freq_ghz")?)?,
        h_sat_km: cfg.require_f64("sat_alt_km")?,
        elevation_deg: sat_elev,
        shadow_fading_db: cfg.f64_or("shadow_fading_db", 0.0)?,
        clutter_loss_db: cfg.f64_or("clutter_loss_db", 0.0)?,
        scintillation_db: cfg.f64_or("scintillation_db", 0.0)?,
        profile: atmosphere,
    };
    let pattern = AntennaPattern::new(
        cfg.require_f64("tx_gain_dbi")?,
        cfg.f64_or("tx_hpbw_deg", 8.0)?,
        cfg.f64_or(
            "sidelobe_floor_dbi",
            AntennaPattern::DEFAULT_SIDELOBE_FLOOR_DBI,
        )?,
    )?;
    let radiometer = RadiometerSpec::new(
        cfg.require_f64("delta_t_kelvin")?,
        cfg.require_f64("bandwidth_hz")?,
        cfg.f64_or("margin_db", 0.0)?,
    )?;
    let rx_gain = cfg.f64_or("rx_gain_dbi", 0.0)?;
    let offset = (sat_elev - pointing).abs();
    if !(MIN_ELEVATION_DEG..=90.0).contains(&pointing) {
        return Err(thzcoex_core::Error::OutOfRange {
            quantity: "pointing elevation (deg)",
            value: pointing,
            min: MIN_ELEVATION_DEG,
            max: 90.0,
        }
        .into());
    }

    let mut pl = ntn_path_loss(&link)?;
    if let Some(g) = cfg.get_f64("gas_db")? {
        pl = pl.with_gas_db(g)?;
    }
    let gain = pattern.gain_dbi(offset);
    let tx = TransmitterSpec::new(cfg.require_f64("tx_power_dbm")?, gain)?;
    let single = received_power(&tx, &pl, rx_gain)?;
    let threshold = interference_threshold(&radiometer)?;
    let budget = max_devices(single, threshold)?;
    let margin = threshold.value() - single.value();

    match format {
        Format::Table => {
            let mut rows = vec![
                (
                    "Frequency",
                    format!("{} GHz", fixed(link.frequency.ghz(), FREQ_DECIMALS)),
                ),
                (
                    "Satellite altitude",
                    format!("{} km", fixed(link.h_sat_km, 1)),
                ),
                (
                    "Satellite elevation",
                    format!("{} deg", fixed(sat_elev, ANGLE_DECIMALS)),
                ),
                (
                    "Pointing offset",
                    format!("{} deg", fixed(offset, ANGLE_DECIMALS)),
                ),
            ];
            rows.extend(ledger_table(&pl));
            rows.extend([
                ("Transmit power", dbm(tx.tx_power_dbm)),
                (
                    "Antenna gain toward satellite",
                    format!("{} dBi", fixed(gain, TABLE_DB_DECIMALS)),
                ),
                (
                    "Receive gain",
                    format!("{} dBi", fixed(rx_gain, TABLE_DB_DECIMALS)),
                ),
                ("Single-device interference", dbm(single.value())),
                ("Interference threshold", dbm(threshold.value())),
                ("Single-device margin", db(margin)),
                (
                    "Max devices",
                    if budget.exceeded {
                        "0 (one device already exceeds the threshold)".to_string()
                    } else {
                        format!("{:.4e} (floor {})", budget.devices, budget.whole_devices)
                    },
                ),
            ]);
            Ok(table(&rows))
        }
        Format::Csv => {
            let mut header: Vec<&str> = BREAKDOWN_COLUMNS.to_vec();
            header.extend([
                "interference_dbm",
                "threshold_dbm",
                "margin_db",
                "max_devices",
                "max_devices_floor",
                "exceeded",
            ]);
            let mut row = breakdown_fields(&pl);
            row.extend([
                fixed(single.value(), DB_DECIMALS),
                fixed(threshold.value(), DB_DECIMALS),
                fixed(margin, DB_DECIMALS),
                fixed(budget.devices, 1),
                budget.whole_devices.to_string(),
                budget.exceeded.to_string(),
            ]);
            Ok(csv_string(&header, [row]))
        }
    }
}

fn fit(path: &Path, format: Format) -> Result<String> {
    let records = parse_measurements(&read(path)?, path)?;
    let fit = fit_excess_loss(&records)?;
    match format {
        Format::Table => Ok(table(&[
            ("Records", fit.n_records.to_string()),
            ("Mean excess loss", db(fit.mean_excess_db)),
            ("Standard deviation", db(fit.std_dev_db)),
        ])),
        Format::Csv => Ok(csv_string(
            &["mean_excess_db", "std_dev_db", "n_records"],
            [vec![
                fixed(fit.mean_excess_db, DB_DECIMALS),
                fixed(fit.std_dev_db, DB_DECIMALS),
                fit.n_records.to_string(),
            ]],
        )),
    }
}
