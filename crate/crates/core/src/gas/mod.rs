//! Line-by-line specific attenuation by oxygen and water vapour, 1-1000 GHz.
//!
//! The imaginary part of the complex refractivity is summed over every
//! tabulated resonance (Van Vleck-Weisskopf shape with line mixing for
//! oxygen, Doppler-corrected widths for water vapour) plus the dry-air
//! Debye and pressure-induced nitrogen continuum:
//!
//! ```text
//! γ = 0.1820 · f · (N″_oxygen + N″_water + N″_continuum)   dB/km
//! ```

use alloc::vec::Vec;

use crate::atmosphere::AtmosphericState;
use crate::error::{in_range, positive, Error, Result};
use crate::units::FrequencyGHz;

mod lines;

pub use lines::{SpectralLine, OXYGEN_LINES, WATER_VAPOR_LINES};

pub const MIN_FREQUENCY_GHZ: f64 = 1.0;
pub const MAX_FREQUENCY_GHZ: f64 = 1000.0;

/// Grids longer than this are refused by [`find_absorption_peaks`].
const MAX_GRID_POINTS: f64 = 1e7;

/// Specific attenuation, dB/km.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SpecificAttenuation(f64);

impl SpecificAttenuation {
    pub(crate) fn new(db_per_km: f64) -> Self {
        debug_assert!(db_per_km >= 0.0);
        Self(db_per_km)
    }

    pub fn db_per_km(self) -> f64 {
        self.0
    }
}

/// Oxygen and water-vapour contributions to the specific attenuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasAttenuation {
    /// Oxygen lines plus the dry continuum.
    pub oxygen_db_per_km: f64,
    pub water_vapor_db_per_km: f64,
}

impl GasAttenuation {
    pub fn total(&self) -> SpecificAttenuation {
        SpecificAttenuation::new(self.oxygen_db_per_km + self.water_vapor_db_per_km)
    }
}

fn check_frequency(f: FrequencyGHz) -> Result<f64> {
    in_range(
        "frequency (GHz)",
        f.ghz(),
        MIN_FREQUENCY_GHZ,
        MAX_FREQUENCY_GHZ,
    )
}

fn check_state(state: &AtmosphericState) -> Result<()> {
    let ok = state.pressure_hpa().is_finite()
        && state.temperature_k().is_finite()
        && state.temperature_k() > 0.0
        && state.pressure_hpa() >= 0.0
        && state.water_vapor_density() >= 0.0;
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid("non-physical atmospheric state"))
    }
}

/// Van Vleck-Weisskopf line shape with line-mixing term `delta`, GHz⁻¹.
fn line_shape(f: f64, center: f64, width: f64, delta: f64) -> f64 {
    let below = center - f;
    let above = center + f;
    f / center
        * ((width - delta * below) / (below * below + width * width)
            + (width - delta * above) / (above * above + width * width))
}

fn oxygen_refractivity(f: f64, dry_hpa: f64, vapor_hpa: f64, theta: f64) -> f64 {
    let total = dry_hpa + vapor_hpa;
    let lines: f64 = OXYGEN_LINES
        .iter()
        .map(|line| {
            let [a1, a2, a3, a4, a5, a6] = line.coeffs;
            let strength =
                a1 * 1e-7 * dry_hpa * theta * theta * theta * libm::exp(a2 * (1.0 - theta));
            let width =
                a3 * 1e-4 * (dry_hpa * libm::pow(theta, 0.8 - a4) + 1.1 * vapor_hpa * theta);
            // Zeeman splitting floor.
            let width = libm::sqrt(width * width + 2.25e-6);
            let delta = (a5 + a6 * theta) * 1e-4 * total * libm::pow(theta, 0.8);
            strength * line_shape(f, line.center_ghz, width, delta)
        })
        .sum();

    // Dry continuum: Debye spectrum of oxygen below 10 GHz plus pressure-induced N2.
    // 1 / (d·(1 + (f/d)²)) is written as d / (d² + f²) so it stays finite at zero pressure.
    let d = 5.6e-4 * total * libm::pow(theta, 0.8);
    let continuum = f
        * dry_hpa
        * theta
        * theta
        * (6.14e-5 * d / (d * d + f * f)
            + 1.4e-12 * dry_hpa * libm::pow(theta, 1.5) / (1.0 + 1.9e-5 * libm::pow(f, 1.5)));
    lines + continuum
}

fn water_vapor_refractivity(f: f64, dry_hpa: f64, vapor_hpa: f64, theta: f64) -> f64 {
    WATER_VAPOR_LINES
        .iter()
        .map(|line| {
            let [b1, b2, b3, b4, b5, b6] = line.coeffs;
            let fi = line.center_ghz;
            let strength =
                b1 * 1e-1 * vapor_hpa * libm::pow(theta, 3.5) * libm::exp(b2 * (1.0 - theta));
            let width = b3
                * 1e-4
                * (dry_hpa * libm::pow(theta, b4) + b5 * vapor_hpa * libm::pow(theta, b6));
            // Doppler broadening.
            let width =
                0.535 * width + libm::sqrt(0.217 * width * width + 2.1316e-12 * fi * fi / theta);
            strength * line_shape(f, fi, width, 0.0)
        })
        .sum()
}

/// Oxygen and water-vapour specific attenuation at `f` in `state`.
pub fn gas_attenuation_parts(f: FrequencyGHz, state: &AtmosphericState) -> Result<GasAttenuation> {
    let f = check_frequency(f)?;
    check_state(state)?;
    let theta = 300.0 / state.temperature_k();
    let vapor = state.vapor_pressure_hpa();
    let dry = state.pressure_hpa();
    let oxygen = oxygen_refractivity(f, dry, vapor, theta);
    let water = water_vapor_refractivity(f, dry, vapor, theta);
    // Individual terms can dip a hair below zero through the line-mixing
    // correction far from the oxygen band; the physical sum cannot.
    Ok(GasAttenuation {
        oxygen_db_per_km: (0.1820 * f * oxygen).max(0.0),
        water_vapor_db_per_km: (0.1820 * f * water).max(0.0),
    })
}

/// Specific attenuation due to atmospheric gases, dB/km.
pub fn specific_gas_attenuation(
    f: FrequencyGHz,
    state: &AtmosphericState,
) -> Result<SpecificAttenuation> {
    gas_attenuation_parts(f, state).map(|parts| parts.total())
}

/// Frequencies `lo, lo + step, ...` up to `hi` (inclusive within half a step).
pub(crate) fn frequency_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    let step = positive("grid step (GHz)", step)?;
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Error::Invalid("frequency range is empty"));
    }
    let span = (hi - lo) / step;
    if span > MAX_GRID_POINTS {
        return Err(Error::Invalid("frequency grid is too large"));
    }
    let n = libm::floor(span + 0.5) as usize;
    Ok((0..=n)
        .map(|i| lo + i as f64 * step)
        .filter(|&x| x <= hi + 0.5 * step)
        .map(|x| x.min(hi))
        .collect())
}

/// Local maxima of the gaseous specific attenuation on a uniform grid.
///
/// A grid point is a peak when it is strictly above its lower neighbour and
/// not below its upper neighbour. The end points are never reported.
pub fn find_absorption_peaks(
    f_lo: FrequencyGHz,
    f_hi: FrequencyGHz,
    state: &AtmosphericState,
    grid_step_ghz: f64,
) -> Result<Vec<FrequencyGHz>> {
    let lo = check_frequency(f_lo)?;
    let hi = check_frequency(f_hi)?;
    let grid = frequency_grid(lo, hi, grid_step_ghz)?;
    let gammas = grid
        .iter()
        .map(|&f| specific_gas_attenuation(FrequencyGHz(f), state).map(|g| g.db_per_km()))
        .collect::<Result<Vec<_>>>()?;
    Ok(gammas
        .windows(3)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0] && w[1] >= w[2])
        .map(|(i, _)| FrequencyGHz(grid[i + 1]))
        .collect())
}
