//! Ground-to-satellite link budget.
//!
//! Total loss is the basic path loss (free space over `h / sin α`, shadow
//! fading, clutter loss) plus the slant-path gas attenuation plus
//! scintillation. Scintillation and shadow fading are inputs; neither is
//! modelled here.

use crate::atmosphere::AtmosphereProfile;
use crate::error::{finite, in_range, non_negative, positive, Result};
use crate::path::{
    earth_space_distance_m, fspl, slant_gas_attenuation, PathLossBreakdown, SlantPath,
    MIN_ELEVATION_DEG,
};
use crate::units::{Decibel, FrequencyGHz};

/// Receive antenna gain assumed for the satellite when none is given.
///
/// 0 dBi understates the interference a real high-gain radiometer antenna would collect.
pub const DEFAULT_SATELLITE_RX_GAIN_DBI: f64 = 0.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NtnLinkConfig {
    pub frequency: FrequencyGHz,
    pub h_sat_km: f64,
    pub elevation_deg: f64,
    /// Shadow fading, dB. 0 is the median of the log-normal.
    pub shadow_fading_db: f64,
    /// Clutter loss (foliage, building entry), dB.
    pub clutter_loss_db: f64,
    pub scintillation_db: f64,
    pub profile: AtmosphereProfile,
}

impl NtnLinkConfig {
    /// A line-of-sight link: no clutter, no shadow fading, no scintillation.
    pub fn line_of_sight(
        frequency: FrequencyGHz,
        h_sat_km: f64,
        elevation_deg: f64,
        profile: AtmosphereProfile,
    ) -> Self {
        Self {
            frequency,
            h_sat_km,
            elevation_deg,
            shadow_fading_db: 0.0,
            clutter_loss_db: 0.0,
            scintillation_db: 0.0,
            profile,
        }
    }

    /// Clutter loss is negligible when the terminal sees the satellite directly.
    pub fn with_line_of_sight(self) -> Self {
        Self {
            clutter_loss_db: 0.0,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        positive("satellite altitude (km)", self.h_sat_km)?;
        in_range(
            "elevation angle (deg)",
            self.elevation_deg,
            MIN_ELEVATION_DEG,
            90.0,
        )?;
        non_negative("shadow fading (dB)", self.shadow_fading_db)?;
        non_negative("clutter loss (dB)", self.clutter_loss_db)?;
        non_negative("scintillation loss (dB)", self.scintillation_db)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransmitterSpec {
    pub tx_power_dbm: f64,
    pub antenna_gain_dbi: f64,
}

impl TransmitterSpec {
    pub fn new(tx_power_dbm: f64, antenna_gain_dbi: f64) -> Result<Self> {
        Ok(Self {
            tx_power_dbm: finite("transmit power (dBm)", tx_power_dbm)?,
            antenna_gain_dbi: finite("antenna gain (dBi)", antenna_gain_dbi)?,
        })
    }

    /// Effective isotropic radiated power, dBm.
    pub fn eirp_dbm(&self) -> f64 {
        self.tx_power_dbm + self.antenna_gain_dbi
    }
}

pub fn ntn_path_loss(cfg: &NtnLinkConfig) -> Result<PathLossBreakdown> {
    cfg.validate()?;
    let distance = earth_space_distance_m(cfg.h_sat_km, cfg.elevation_deg)?;
    let path = SlantPath::new(0.0, cfg.h_sat_km, cfg.elevation_deg)?;
    let free = fspl(cfg.frequency, distance)?;
    let gas = slant_gas_attenuation(cfg.frequency, &cfg.profile, &path)?;
    PathLossBreakdown::new(
        free.value(),
        gas.value(),
        0.0,
        cfg.clutter_loss_db,
        cfg.shadow_fading_db,
        cfg.scintillation_db,
    )
}

/// `P_tx + G_tx + G_rx − PL`, dBm.
pub fn received_power(
    tx: &TransmitterSpec,
    pl: &PathLossBreakdown,
    rx_gain_dbi: f64,
) -> Result<Decibel> {
    let rx_gain = finite("receive gain (dBi)", rx_gain_dbi)?;
    Decibel::dbm(tx.tx_power_dbm + tx.antenna_gain_dbi + rx_gain - pl.total_db())
}
