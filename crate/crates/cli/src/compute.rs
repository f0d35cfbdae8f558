//! Grid evaluation shared by the subcommands and the figure datasets.
//!
//! Grid points are evaluated in parallel; results always come back in grid order.

use rayon::prelude::*;
use thzcoex_core::atmosphere::{AtmosphereProfile, AtmosphericState};
use thzcoex_core::gas::specific_gas_attenuation;
use thzcoex_core::path::{
    earth_space_distance_m, fspl, total_terrestrial_loss, GasColumn, PathLossBreakdown, SlantPath,
};
use thzcoex_core::rain::{specific_rain_attenuation, Polarization, RainRate};
use thzcoex_core::units::FrequencyGHz;

use crate::error::Result;
use crate::output::{
    fixed, ANGLE_DECIMALS, DB_DECIMALS, DISTANCE_DECIMALS, FREQ_DECIMALS, RATE_DECIMALS,
};

pub fn ghz(f: f64) -> Result<FrequencyGHz> {
    Ok(FrequencyGHz::new(f)?)
}

/// `(frequency, γ)` for each frequency, dB/km.
pub fn gas_sweep(freqs: &[f64], state: &AtmosphericState) -> Result<Vec<(f64, f64)>> {
    freqs
        .par_iter()
        .map(|&f| Ok((f, specific_gas_attenuation(ghz(f)?, state)?.db_per_km())))
        .collect()
}

/// `(frequency, rate, γ_R)` with rates varying slowest.
pub fn rain_sweep(freqs: &[f64], rates: &[f64], pol: Polarization) -> Result<Vec<(f64, f64, f64)>> {
    let points: Vec<(f64, f64)> = rates
        .iter()
        .flat_map(|&r| freqs.iter().map(move |&f| (f, r)))
        .collect();
    points
        .par_iter()
        .map(|&(f, r)| {
            let gamma = specific_rain_attenuation(ghz(f)?, RainRate::new(r)?, pol)?.db_per_km();
            Ok((f, r, gamma))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlantRow {
    pub frequency_ghz: f64,
    pub sat_alt_km: f64,
    pub elevation_deg: f64,
    pub loss: PathLossBreakdown,
}

/// Ground-to-satellite loss over `freqs × altitudes × elevations`, in that nesting order.
pub fn slant_sweep(
    freqs: &[f64],
    altitudes_km: &[f64],
    elevations_deg: &[f64],
    profile: &AtmosphereProfile,
) -> Result<Vec<SlantRow>> {
    // One gas column per (frequency, altitude); above 100 km the altitude only moves the path top.
    let columns: Vec<GasColumn> = freqs
        .par_iter()
        .flat_map(|&f| altitudes_km.par_iter().map(move |&h| (f, h)))
        .map(|(f, h)| Ok(GasColumn::new(ghz(f)?, profile, 0.0, h, 1)?))
        .collect::<Result<_>>()?;
    let points: Vec<(usize, f64, f64, f64)> = freqs
        .iter()
        .flat_map(|&f| altitudes_km.iter().map(move |&h| (f, h)))
        .enumerate()
        .flat_map(|(c, (f, h))| elevations_deg.iter().map(move |&e| (c, f, h, e)))
        .collect();
    points
        .par_iter()
        .map(|&(c, f, h, e)| {
            let path = SlantPath::new(0.0, h, e)?;
            let free = fspl(ghz(f)?, earth_space_distance_m(h, e)?)?.value();
            let gas = columns[c].attenuation(&path)?.value();
            Ok(SlantRow {
                frequency_ghz: f,
                sat_alt_km: h,
                elevation_deg: e,
                loss: PathLossBreakdown::new(free, gas, 0.0, 0.0, 0.0, 0.0)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TerrestrialRow {
    pub frequency_ghz: f64,
    pub distance_m: f64,
    pub rate_mm_h: f64,
    pub loss: PathLossBreakdown,
}

/// Horizontal link loss over `freqs × rates × distances`, in that nesting order.
pub fn terrestrial_sweep(
    freqs: &[f64],
    distances_m: &[f64],
    rates: &[f64],
    profile: &AtmosphereProfile,
    pol: Polarization,
) -> Result<Vec<TerrestrialRow>> {
    let points: Vec<(f64, f64, f64)> = freqs
        .iter()
        .flat_map(|&f| rates.iter().map(move |&r| (f, r)))
        .flat_map(|(f, r)| distances_m.iter().map(move |&d| (f, r, d)))
        .collect();
    points
        .par_iter()
        .map(|&(f, r, d)| {
            Ok(TerrestrialRow {
                frequency_ghz: f,
                distance_m: d,
                rate_mm_h: r,
                loss: total_terrestrial_loss(ghz(f)?, d, RainRate::new(r)?, profile, pol)?,
            })
        })
        .collect()
}

pub const BREAKDOWN_COLUMNS: [&str; 7] = [
    "fspl_db",
    "gas_db",
    "rain_db",
    "clutter_db",
    "shadow_db",
    "scintillation_db",
    "total_db",
];

pub fn breakdown_fields(pl: &PathLossBreakdown) -> Vec<String> {
    [
        pl.fspl_db(),
        pl.gas_db(),
        pl.rain_db(),
        pl.clutter_db(),
        pl.shadow_db(),
        pl.scintillation_db(),
        pl.total_db(),
    ]
    .iter()
    .map(|&x| fixed(x, DB_DECIMALS))
    .collect()
}

pub fn slant_header() -> Vec<&'static str> {
    let mut h = vec!["frequency_ghz", "sat_alt_km", "elevation_deg"];
    h.extend(BREAKDOWN_COLUMNS);
    h
}

pub fn slant_fields(row: &SlantRow) -> Vec<String> {
    let mut v = vec![
        fixed(row.frequency_ghz, FREQ_DECIMALS),
        fixed(row.sat_alt_km, DISTANCE_DECIMALS),
        fixed(row.elevation_deg, ANGLE_DECIMALS),
    ];
    v.extend(breakdown_fields(&row.loss));
    v
}

pub fn terrestrial_header() -> Vec<&'static str> {
    let mut h = vec!["frequency_ghz", "distance_m", "rate_mm_h"];
    h.extend(BREAKDOWN_COLUMNS);
    h
}

pub fn terrestrial_fields(row: &TerrestrialRow) -> Vec<String> {
    let mut v = vec![
        fixed(row.frequency_ghz, FREQ_DECIMALS),
        fixed(row.distance_m, DISTANCE_DECIMALS),
        fixed(row.rate_mm_h, RATE_DECIMALS),
    ];
    v.extend(breakdown_fields(&row.loss));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use thzcoex_core::path::total_slant_loss;

    #[test]
    fn slant_sweep_matches_direct_evaluation() {
        let s = AtmosphereProfile::standard();
        let rows = slant_sweep(&[165.0, 325.0], &[400.0, 36000.0], &[0.5, 10.0, 90.0], &s).unwrap();
        assert_eq!(rows.len(), 12);
        for r in &rows {
            let direct = total_slant_loss(
                ghz(r.frequency_ghz).unwrap(),
                r.sat_alt_km,
                r.elevation_deg,
                &s,
            )
            .unwrap();
            assert_eq!(r.loss, direct);
        }
        assert_eq!(
            (
                rows[3].frequency_ghz,
                rows[3].sat_alt_km,
                rows[3].elevation_deg
            ),
            (165.0, 36000.0, 0.5)
        );
    }

    #[test]
    fn sweeps_propagate_domain_errors() {
        let s = AtmosphereProfile::standard();
        assert!(gas_sweep(&[0.5], &s.state_at(0.0).unwrap()).is_err());
        assert!(rain_sweep(&[100.0], &[-1.0], Polarization::Horizontal).is_err());
        assert!(slant_sweep(&[165.0], &[400.0], &[0.1], &s).is_err());
        assert!(terrestrial_sweep(&[140.0], &[0.0], &[0.0], &s, Polarization::Horizontal).is_err());
    }

    #[test]
    fn rain_sweep_order() {
        let rows = rain_sweep(&[100.0, 200.0], &[1.0, 25.0], Polarization::Horizontal).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.0, r.1)).collect();
        assert_eq!(
            keys,
            [(100.0, 1.0), (200.0, 1.0), (100.0, 25.0), (200.0, 25.0)]
        );
    }
}
