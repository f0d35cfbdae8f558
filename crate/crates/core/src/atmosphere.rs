//! Mean annual global reference atmosphere.
//!
//! Temperature and pressure follow the layered standard-atmosphere formulas
//! (geopotential height below 86 km, geometric polynomial fits from 86 to
//! 100 km). Water vapour decays exponentially from its surface value with a
//! 2 km scale height.

use alloc::vec::Vec;

use crate::error::{in_range, non_negative, positive, Result};

/// Highest altitude with a defined state. Above it the path is treated as vacuum.
pub const TOP_OF_ATMOSPHERE_KM: f64 = 100.0;

/// Water-vapour scale height, km.
pub const WATER_VAPOR_SCALE_HEIGHT_KM: f64 = 2.0;

/// Surface water-vapour density of the "standard" preset, g/m³.
pub const STANDARD_SURFACE_VAPOR: f64 = 7.5;

const EARTH_RADIUS_GEOPOTENTIAL_KM: f64 = 6356.766;

/// Converts water-vapour density (g/m³) at temperature `t` (K) to partial pressure (hPa).
pub fn vapor_pressure_hpa(density: f64, temperature_k: f64) -> f64 {
    density * temperature_k / 216.7
}

/// Pressure, temperature and water-vapour density at a point.
///
/// `pressure_hpa` is the dry-air pressure taken from the reference profile;
/// the water-vapour partial pressure comes on top of it, so the total
/// barometric pressure is their sum. A state with zero pressure and zero
/// vapour is vacuum and absorbs nothing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphericState {
    pressure_hpa: f64,
    temperature_k: f64,
    water_vapor_density: f64,
}

impl AtmosphericState {
    pub fn new(pressure_hpa: f64, temperature_k: f64, water_vapor_density: f64) -> Result<Self> {
        Ok(Self {
            pressure_hpa: non_negative("pressure (hPa)", pressure_hpa)?,
            temperature_k: positive("temperature (K)", temperature_k)?,
            water_vapor_density: non_negative("water vapour density (g/m3)", water_vapor_density)?,
        })
    }

    /// No absorbing gas at all.
    pub fn vacuum() -> Self {
        Self {
            pressure_hpa: 0.0,
            temperature_k: 2.7,
            water_vapor_density: 0.0,
        }
    }

    pub fn pressure_hpa(&self) -> f64 {
        self.pressure_hpa
    }

    pub fn temperature_k(&self) -> f64 {
        self.temperature_k
    }

    pub fn water_vapor_density(&self) -> f64 {
        self.water_vapor_density
    }

    /// Water-vapour partial pressure `e`, hPa.
    pub fn vapor_pressure_hpa(&self) -> f64 {
        vapor_pressure_hpa(self.water_vapor_density, self.temperature_k)
    }

    /// Dry air plus water vapour, hPa.
    pub fn total_pressure_hpa(&self) -> f64 {
        self.pressure_hpa + self.vapor_pressure_hpa()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    ReferenceMeanAnnual,
    /// Zero pressure everywhere. Used to check that integrals vanish without an absorber.
    Vacuum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphereProfile {
    surface_water_vapor_density: f64,
    kind: ProfileKind,
}

impl AtmosphereProfile {
    pub fn reference(surface_water_vapor_density: f64) -> Result<Self> {
        Ok(Self {
            surface_water_vapor_density: non_negative(
                "surface water vapour density (g/m3)",
                surface_water_vapor_density,
            )?,
            kind: ProfileKind::ReferenceMeanAnnual,
        })
    }

    /// Reference atmosphere with 7.5 g/m³ of water vapour at the surface.
    pub fn standard() -> Self {
        Self {
            surface_water_vapor_density: STANDARD_SURFACE_VAPOR,
            kind: ProfileKind::ReferenceMeanAnnual,
        }
    }

    /// Reference atmosphere with no water vapour.
    pub fn dry() -> Self {
        Self {
            surface_water_vapor_density: 0.0,
            kind: ProfileKind::ReferenceMeanAnnual,
        }
    }

    pub fn vacuum() -> Self {
        Self {
            surface_water_vapor_density: 0.0,
            kind: ProfileKind::Vacuum,
        }
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn surface_water_vapor_density(&self) -> f64 {
        self.surface_water_vapor_density
    }

    pub fn state_at(&self, altitude_km: f64) -> Result<AtmosphericState> {
        let h = in_range("altitude (km)", altitude_km, 0.0, TOP_OF_ATMOSPHERE_KM)?;
        if self.kind == ProfileKind::Vacuum {
            return Ok(AtmosphericState::vacuum());
        }
        let (pressure_hpa, temperature_k) = reference_pressure_temperature(h);
        let water_vapor_density =
            self.surface_water_vapor_density * libm::exp(-h / WATER_VAPOR_SCALE_HEIGHT_KM);
        Ok(AtmosphericState {
            pressure_hpa,
            temperature_k,
            water_vapor_density,
        })
    }
}

/// Pressure (hPa) and temperature (K) at geometric altitude `h` km, 0 ≤ h ≤ 100.
fn reference_pressure_temperature(h: f64) -> (f64, f64) {
    if h < 86.0 {
        let hp = EARTH_RADIUS_GEOPOTENTIAL_KM * h / (EARTH_RADIUS_GEOPOTENTIAL_KM + h);
        if hp <= 11.0 {
            let t = 288.15 - 6.5 * hp;
            (1013.25 * libm::pow(288.15 / t, -34.1632 / 6.5), t)
        } else if hp <= 20.0 {
            (
                226.3226 * libm::exp(-34.1632 * (hp - 11.0) / 216.65),
                216.65,
            )
        } else if hp <= 32.0 {
            let t = 216.65 + (hp - 20.0);
            (54.74980 * libm::pow(216.65 / t, 34.1632), t)
        } else if hp <= 47.0 {
            let t = 228.65 + 2.8 * (hp - 32.0);
            (8.680422 * libm::pow(228.65 / t, 34.1632 / 2.8), t)
        } else if hp <= 51.0 {
            (
                1.109106 * libm::exp(-34.1632 * (hp - 47.0) / 270.65),
                270.65,
            )
        } else if hp <= 71.0 {
            let t = 270.65 - 2.8 * (hp - 51.0);
            (0.6694167 * libm::pow(270.65 / t, -34.1632 / 2.8), t)
        } else {
            let t = 214.65 - 2.0 * (hp - 71.0);
            (0.03956649 * libm::pow(214.65 / t, -34.1632 / 2.0), t)
        }
    } else {
        let t = if h <= 91.0 {
            186.8673
        } else {
            let x = (h - 91.0) / 19.9429;
            263.1905 - 76.3232 * libm::sqrt(1.0 - x * x)
        };
        let ln_p = 95.571899 - 4.011801 * h + 6.424731e-2 * h * h - 4.789660e-4 * h * h * h
            + 1.340543e-6 * h * h * h * h;
        (libm::exp(ln_p), t)
    }
}

/// Thickness of the `i`-th integration layer (1-based), km.
pub fn layer_thickness_km(i: usize) -> f64 {
    1e-4 * libm::exp((i as f64 - 1.0) / 100.0)
}

/// Boundaries of the exponentially thickening layers used for slant-path integration.
///
/// Starts at 0 and stops at the last boundary that does not overshoot
/// `max_altitude_km`; the remainder above it (less than one layer) is left to
/// the caller.
pub fn layer_boundaries(max_altitude_km: f64) -> Result<Vec<f64>> {
    let top = positive("maximum altitude (km)", max_altitude_km)?;
    let mut bounds = Vec::with_capacity(1024);
    bounds.push(0.0);
    let mut z = 0.0;
    let mut i = 1;
    loop {
        let next = z + layer_thickness_km(i);
        if next > top {
            break;
        }
        bounds.push(next);
        z = next;
        i += 1;
    }
    Ok(bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn sea_level_standard_state() {
        let s = AtmosphereProfile::standard().state_at(0.0).unwrap();
        assert_eq!(s.pressure_hpa(), 1013.25);
        assert_eq!(s.temperature_k(), 288.15);
        assert_eq!(s.water_vapor_density(), 7.5);
    }

    #[test]
    fn dry_has_no_vapour() {
        let s = AtmosphereProfile::dry().state_at(0.0).unwrap();
        assert_eq!(s.water_vapor_density(), 0.0);
        assert_eq!(s.total_pressure_hpa(), s.pressure_hpa());
    }

    #[test]
    fn ten_km_standard_state() {
        // Hand evaluation of the 0-11 km layer: h' = 6356.766*10/6366.766 = 9.98429 km,
        // T = 288.15 - 6.5 h' = 223.2521 K, P = 1013.25 (288.15/T)^(-34.1632/6.5) = 264.999 hPa,
        // rho = 7.5 exp(-5) = 0.0505346 g/m3.
        let s = AtmosphereProfile::standard().state_at(10.0).unwrap();
        assert_relative_eq!(s.temperature_k(), 223.2521, max_relative = 1e-5);
        assert_relative_eq!(s.pressure_hpa(), 264.999, max_relative = 1e-4);
        assert_relative_eq!(s.water_vapor_density(), 0.0505346, max_relative = 1e-5);
    }

    #[test]
    fn altitude_out_of_range() {
        let p = AtmosphereProfile::standard();
        assert!(p.state_at(-0.1).is_err());
        assert!(p.state_at(100.5).is_err());
        assert!(p.state_at(100.0).is_ok());
    }

    #[test]
    fn continuous_across_layer_boundaries() {
        // Geometric altitudes of the geopotential breakpoints plus the 86 km and 91 km seams.
        let g = |hp: f64| EARTH_RADIUS_GEOPOTENTIAL_KM * hp / (EARTH_RADIUS_GEOPOTENTIAL_KM - hp);
        let seams = [
            g(11.0),
            g(20.0),
            g(32.0),
            g(47.0),
            g(51.0),
            g(71.0),
            86.0,
            91.0,
        ];
        let p = AtmosphereProfile::standard();
        for z in seams {
            let lo = p.state_at(z - 1e-7).unwrap();
            let hi = p.state_at(z + 1e-7).unwrap();
            // The 86 km seam joins two independent fits; 0.1 K and 0.1% is the size of that join.
            assert!(
                (lo.temperature_k() - hi.temperature_k()).abs() < 0.1,
                "T jump at {z}"
            );
            assert!(
                (lo.pressure_hpa() / hi.pressure_hpa() - 1.0).abs() < 1e-3,
                "P jump at {z}"
            );
        }
    }

    #[test]
    fn layers_start_small_and_truncate() {
        assert_eq!(layer_boundaries(0.0001).unwrap(), [0.0, 0.0001]);
        let b = layer_boundaries(100.0).unwrap();
        assert_eq!(b[1] - b[0], 0.0001);
        let last = *b.last().unwrap();
        assert!(last <= 100.0);
        assert!(last + layer_thickness_km(b.len()) > 100.0);
        assert!(b.windows(2).all(|w| w[1] > w[0]));
        assert!(layer_boundaries(0.0).is_err());
        assert!(layer_boundaries(-1.0).is_err());
    }

    #[test]
    fn vacuum_profile_has_no_pressure() {
        let s = AtmosphereProfile::vacuum().state_at(5.0).unwrap();
        assert_eq!(s.pressure_hpa(), 0.0);
        assert_eq!(s.water_vapor_density(), 0.0);
    }

    #[test]
    fn non_physical_state_rejected() {
        assert!(AtmosphericState::new(1013.25, 0.0, 7.5).is_err());
        assert!(AtmosphericState::new(1013.25, 288.0, -0.1).is_err());
        assert!(AtmosphericState::new(-1.0, 288.0, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn troposphere_is_monotone(a in 0.0f64..10.0, b in 0.0f64..10.0, w in 0.0f64..30.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let p = AtmosphereProfile::reference(w).unwrap();
            let s_lo = p.state_at(lo).unwrap();
            let s_hi = p.state_at(hi).unwrap();
            prop_assert!(s_hi.pressure_hpa() <= s_lo.pressure_hpa());
            prop_assert!(s_hi.temperature_k() <= s_lo.temperature_k());
            prop_assert!(s_hi.water_vapor_density() <= s_lo.water_vapor_density());
        }

        #[test]
        fn vapour_decays_exponentially(z in 0.0f64..100.0, w in 0.1f64..30.0) {
            let p = AtmosphereProfile::reference(w).unwrap();
            let ratio = p.state_at(z).unwrap().water_vapor_density() / w;
            prop_assert!((ratio - libm::exp(-z / 2.0)).abs() < 1e-9);
            prop_assert_eq!(AtmosphereProfile::dry().state_at(z).unwrap().water_vapor_density(), 0.0);
        }
    }
}
