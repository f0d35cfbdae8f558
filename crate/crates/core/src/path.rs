//! Free-space loss, slant-path geometry and loss ledgers.
//!
//! Slant paths are straight rays over a spherical earth. The absorbing
//! atmosphere is cut into thin spherical shells; each shell contributes its
//! mid-shell specific attenuation times the chord the ray spends inside it.
//! Free-space loss for earth-space links uses the `h / sin(α)` distance.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::atmosphere::{layer_boundaries, AtmosphereProfile, TOP_OF_ATMOSPHERE_KM};
use crate::error::{finite, in_range, non_negative, positive, Error, Result};
use crate::gas::specific_gas_attenuation;
use crate::rain::{specific_rain_attenuation, Polarization, RainRate};
use crate::units::{Decibel, FrequencyGHz, SPEED_OF_LIGHT};

pub const EARTH_RADIUS_KM: f64 = 6371.0;

/// Lowest elevation accepted for a slant path, degrees.
pub const MIN_ELEVATION_DEG: f64 = 0.5;

/// Friis free-space path loss `20·log10(4π·d·f/c)`.
pub fn fspl(f: FrequencyGHz, distance_m: f64) -> Result<Decibel> {
    let d = positive("distance (m)", distance_m)?;
    Decibel::relative(20.0 * libm::log10(4.0 * PI * d * f.hz() / SPEED_OF_LIGHT))
}

/// A straight ray from a ground terminal up to `top_altitude_km`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlantPath {
    ground_altitude_km: f64,
    top_altitude_km: f64,
    elevation_angle_deg: f64,
}

impl SlantPath {
    pub fn new(
        ground_altitude_km: f64,
        top_altitude_km: f64,
        elevation_angle_deg: f64,
    ) -> Result<Self> {
        let ground = non_negative("ground altitude (km)", ground_altitude_km)?;
        let top = finite("top altitude (km)", top_altitude_km)?;
        if top <= ground {
            return Err(Error::Invalid(
                "top altitude must be above the ground terminal",
            ));
        }
        let elevation = in_range(
            "elevation angle (deg)",
            elevation_angle_deg,
            MIN_ELEVATION_DEG,
            90.0,
        )?;
        Ok(Self {
            ground_altitude_km: ground,
            top_altitude_km: top,
            elevation_angle_deg: elevation,
        })
    }

    pub fn ground_altitude_km(&self) -> f64 {
        self.ground_altitude_km
    }

    pub fn top_altitude_km(&self) -> f64 {
        self.top_altitude_km
    }

    pub fn elevation_angle_deg(&self) -> f64 {
        self.elevation_angle_deg
    }

    /// Distance along the ray from the ground terminal to altitude `h` km.
    fn range_to_altitude(&self, h: f64) -> f64 {
        let r0 = EARTH_RADIUS_KM + self.ground_altitude_km;
        let r = EARTH_RADIUS_KM + h;
        let (sin_a, cos_a) = libm::sincos(self.elevation_angle_deg.to_radians());
        // sqrt(r² − r0²cos²α) − r0·sinα, rationalised to avoid cancellation near the ground.
        let root = libm::sqrt(r * r - r0 * r0 * cos_a * cos_a);
        (r - r0) * (r + r0) / (root + r0 * sin_a)
    }
}

/// Length of the ray inside the shell `[shell_lo_km, shell_hi_km]`, km.
pub fn geometric_length_through_shell(
    path: &SlantPath,
    shell_lo_km: f64,
    shell_hi_km: f64,
) -> Result<f64> {
    let valid = shell_lo_km.is_finite()
        && shell_hi_km.is_finite()
        && path.ground_altitude_km <= shell_lo_km
        && shell_lo_km < shell_hi_km
        && shell_hi_km <= path.top_altitude_km;
    if !valid {
        return Err(Error::Invalid(
            "shell must satisfy ground <= lower < upper <= top",
        ));
    }
    Ok(path.range_to_altitude(shell_hi_km) - path.range_to_altitude(shell_lo_km))
}

/// Shell boundaries of the absorbing part of `path`: the standard exponential
/// layers from the ground terminal, closed off at the lower of the path top
/// and the top of the atmosphere.
fn absorbing_shells(path: &SlantPath) -> Result<Vec<f64>> {
    let ground = path.ground_altitude_km;
    let top = path.top_altitude_km.min(TOP_OF_ATMOSPHERE_KM);
    if ground >= top {
        return Ok(Vec::new());
    }
    let mut bounds: Vec<f64> = layer_boundaries(top - ground)?
        .into_iter()
        .map(|z| ground + z)
        .collect();
    let last = *bounds.last().expect("layer boundaries start at zero");
    if last < top {
        bounds.push(top);
    }
    Ok(bounds)
}

/// Total gaseous attenuation along `path`, dB.
pub fn slant_gas_attenuation(
    f: FrequencyGHz,
    profile: &AtmosphereProfile,
    path: &SlantPath,
) -> Result<Decibel> {
    slant_gas_attenuation_refined(f, profile, path, 1)
}

/// As [`slant_gas_attenuation`], with every layer split into `subdivisions` equal parts.
pub fn slant_gas_attenuation_refined(
    f: FrequencyGHz,
    profile: &AtmosphereProfile,
    path: &SlantPath,
    subdivisions: usize,
) -> Result<Decibel> {
    GasColumn::new(
        f,
        profile,
        path.ground_altitude_km,
        path.top_altitude_km,
        subdivisions,
    )?
    .attenuation(path)
}

/// Mid-shell specific attenuation of every absorbing shell above a ground
/// terminal, at one frequency.
///
/// The shell values do not depend on the elevation angle, so a sweep over
/// elevations can evaluate the gas model once and reuse it. The column is
/// built for paths topping out at or above `top_altitude_km`; shells above
/// the top of the atmosphere are never included.
#[derive(Debug, Clone, PartialEq)]
pub struct GasColumn {
    ground_altitude_km: f64,
    top_altitude_km: f64,
    bounds: Vec<f64>,
    gammas: Vec<f64>,
}

impl GasColumn {
    pub fn new(
        f: FrequencyGHz,
        profile: &AtmosphereProfile,
        ground_altitude_km: f64,
        top_altitude_km: f64,
        subdivisions: usize,
    ) -> Result<Self> {
        if subdivisions == 0 {
            return Err(Error::Invalid("layer subdivision count must be at least 1"));
        }
        let probe = SlantPath::new(ground_altitude_km, top_altitude_km, 90.0)?;
        let coarse = absorbing_shells(&probe)?;
        let mut bounds = Vec::with_capacity(coarse.len() * subdivisions);
        if let Some(&first) = coarse.first() {
            bounds.push(first);
        }
        for w in coarse.windows(2) {
            let step = (w[1] - w[0]) / subdivisions as f64;
            for k in 1..subdivisions {
                bounds.push(w[0] + k as f64 * step);
            }
            bounds.push(w[1]);
        }
        let gammas = bounds
            .windows(2)
            .map(|w| {
                let state = profile.state_at(0.5 * (w[0] + w[1]))?;
                Ok(specific_gas_attenuation(f, &state)?.db_per_km())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ground_altitude_km: probe.ground_altitude_km,
            top_altitude_km: probe.top_altitude_km,
            bounds,
            gammas,
        })
    }

    pub fn shell_count(&self) -> usize {
        self.gammas.len()
    }

    /// Gaseous attenuation along `path`, dB. The path must start at the
    /// column's ground altitude and reach at least its top.
    pub fn attenuation(&self, path: &SlantPath) -> Result<Decibel> {
        if path.ground_altitude_km != self.ground_altitude_km
            || path.top_altitude_km.min(TOP_OF_ATMOSPHERE_KM)
                != self.top_altitude_km.min(TOP_OF_ATMOSPHERE_KM)
        {
            return Err(Error::Invalid(
                "path does not span the precomputed gas column",
            ));
        }
        let mut total = 0.0;
        for (w, gamma) in self.bounds.windows(2).zip(&self.gammas) {
            total += gamma * (path.range_to_altitude(w[1]) - path.range_to_altitude(w[0]));
        }
        Decibel::relative(total)
    }
}

/// Itemised path loss. Every component is a non-negative loss in dB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLossBreakdown {
    fspl_db: f64,
    gas_db: f64,
    rain_db: f64,
    clutter_db: f64,
    shadow_db: f64,
    scintillation_db: f64,
}

impl PathLossBreakdown {
    pub fn new(
        fspl_db: f64,
        gas_db: f64,
        rain_db: f64,
        clutter_db: f64,
        shadow_db: f64,
        scintillation_db: f64,
    ) -> Result<Self> {
        Ok(Self {
            fspl_db: non_negative("free-space loss (dB)", fspl_db)?,
            gas_db: non_negative("gas attenuation (dB)", gas_db)?,
            rain_db: non_negative("rain attenuation (dB)", rain_db)?,
            clutter_db: non_negative("clutter loss (dB)", clutter_db)?,
            shadow_db: non_negative("shadow fading (dB)", shadow_db)?,
            scintillation_db: non_negative("scintillation loss (dB)", scintillation_db)?,
        })
    }

    pub fn fspl_db(&self) -> f64 {
        self.fspl_db
    }

    pub fn gas_db(&self) -> f64 {
        self.gas_db
    }

    pub fn rain_db(&self) -> f64 {
        self.rain_db
    }

    pub fn clutter_db(&self) -> f64 {
        self.clutter_db
    }

    pub fn shadow_db(&self) -> f64 {
        self.shadow_db
    }

    pub fn scintillation_db(&self) -> f64 {
        self.scintillation_db
    }

    pub fn total_db(&self) -> f64 {
        self.fspl_db
            + self.gas_db
            + self.rain_db
            + self.clutter_db
            + self.shadow_db
            + self.scintillation_db
    }

    /// The same ledger with the gas term replaced, e.g. by an externally quoted value.
    pub fn with_gas_db(self, gas_db: f64) -> Result<Self> {
        Ok(Self {
            gas_db: non_negative("gas attenuation (dB)", gas_db)?,
            ..self
        })
    }

    pub fn with_clutter_db(self, clutter_db: f64) -> Result<Self> {
        Ok(Self {
            clutter_db: non_negative("clutter loss (dB)", clutter_db)?,
            ..self
        })
    }

    pub fn with_shadow_db(self, shadow_db: f64) -> Result<Self> {
        Ok(Self {
            shadow_db: non_negative("shadow fading (dB)", shadow_db)?,
            ..self
        })
    }

    pub fn with_scintillation_db(self, scintillation_db: f64) -> Result<Self> {
        Ok(Self {
            scintillation_db: non_negative("scintillation loss (dB)", scintillation_db)?,
            ..self
        })
    }
}

/// Distance used for earth-space free-space loss, `h / sin(α)`, metres.
pub fn earth_space_distance_m(h_sat_km: f64, elevation_deg: f64) -> Result<f64> {
    let h = positive("satellite altitude (km)", h_sat_km)?;
    let a = in_range(
        "elevation angle (deg)",
        elevation_deg,
        MIN_ELEVATION_DEG,
        90.0,
    )?;
    Ok(h * 1e3 / libm::sin(a.to_radians()))
}

/// Free-space plus gaseous loss from a sea-level terminal to a satellite at `h_sat_km`.
pub fn total_slant_loss(
    f: FrequencyGHz,
    h_sat_km: f64,
    elevation_deg: f64,
    profile: &AtmosphereProfile,
) -> Result<PathLossBreakdown> {
    let distance = earth_space_distance_m(h_sat_km, elevation_deg)?;
    let path = SlantPath::new(0.0, h_sat_km, elevation_deg)?;
    let free = fspl(f, distance)?;
    let gas = slant_gas_attenuation(f, profile, &path)?;
    PathLossBreakdown::new(free.value(), gas.value(), 0.0, 0.0, 0.0, 0.0)
}

/// Horizontal sea-level link: free space plus homogeneous gas and rain attenuation.
pub fn total_terrestrial_loss(
    f: FrequencyGHz,
    distance_m: f64,
    rain_rate: RainRate,
    profile: &AtmosphereProfile,
    pol: Polarization,
) -> Result<PathLossBreakdown> {
    let free = fspl(f, distance_m)?;
    let km = distance_m / 1e3;
    let gas = specific_gas_attenuation(f, &profile.state_at(0.0)?)?.db_per_km() * km;
    let rain = specific_rain_attenuation(f, rain_rate, pol)?.db_per_km() * km;
    PathLossBreakdown::new(free.value().max(0.0), gas, rain, 0.0, 0.0, 0.0)
}
