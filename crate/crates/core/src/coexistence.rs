//! Passive-radiometer protection and aggregate interference from ground emitters.

use crate::error::{finite, in_range, non_negative, positive, Error, Result};
use crate::ntn::{ntn_path_loss, NtnLinkConfig, DEFAULT_SATELLITE_RX_GAIN_DBI};
use crate::path::MIN_ELEVATION_DEG;
use crate::units::{db_from_ratio, Decibel, BOLTZMANN};

/// Sensitivity of a passive radiometer channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiometerSpec {
    pub delta_t_kelvin: f64,
    pub bandwidth_hz: f64,
    /// How far below `k·ΔT·B` the permissible interference sits, dB.
    pub protection_margin_db: f64,
}

impl RadiometerSpec {
    pub fn new(delta_t_kelvin: f64, bandwidth_hz: f64, protection_margin_db: f64) -> Result<Self> {
        Ok(Self {
            delta_t_kelvin: positive("radiometric sensitivity (K)", delta_t_kelvin)?,
            bandwidth_hz: positive("bandwidth (Hz)", bandwidth_hz)?,
            protection_margin_db: non_negative("protection margin (dB)", protection_margin_db)?,
        })
    }
}

/// Permissible interference `10·log10(k·ΔT·B·10³) − margin`, dBm.
pub fn interference_threshold(spec: &RadiometerSpec) -> Result<Decibel> {
    let spec = RadiometerSpec::new(
        spec.delta_t_kelvin,
        spec.bandwidth_hz,
        spec.protection_margin_db,
    )?;
    let watts = BOLTZMANN * spec.delta_t_kelvin * spec.bandwidth_hz;
    Decibel::dbm(db_from_ratio(watts * 1e3) - spec.protection_margin_db)
}

/// Power sum of `n` emitters that each deliver `single`, dBm.
///
/// `n` is a real count so that it round-trips through [`max_devices`].
pub fn aggregate_interference(single: Decibel, n: f64) -> Result<Decibel> {
    if !single.is_absolute() {
        return Err(Error::Invalid(
            "single-emitter interference must be an absolute level (dBm)",
        ));
    }
    if !(n.is_finite() && n >= 1.0) {
        return Err(Error::OutOfRange {
            quantity: "emitter count",
            value: n,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    Decibel::dbm(single.value() + db_from_ratio(n))
}

/// How many identical emitters fit under a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviceBudget {
    /// `10^((threshold − single)/10)`, or 0 when exceeded.
    pub devices: f64,
    pub whole_devices: u64,
    /// A single emitter already reaches the threshold.
    pub exceeded: bool,
}

pub fn max_devices(single: Decibel, threshold: Decibel) -> Result<DeviceBudget> {
    if !single.is_absolute() || !threshold.is_absolute() {
        return Err(Error::Invalid("interference levels must be absolute (dBm)"));
    }
    let headroom = threshold.value() - single.value();
    if headroom <= 0.0 {
        return Ok(DeviceBudget {
            devices: 0.0,
            whole_devices: 0,
            exceeded: true,
        });
    }
    let devices = libm::pow(10.0, headroom / 10.0);
    Ok(DeviceBudget {
        devices,
        whole_devices: libm::floor(devices) as u64,
        exceeded: false,
    })
}

/// Gaussian main lobe with a flat sidelobe floor:
/// `G(θ) = max(G₀ − 12·(θ/HPBW)², floor)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntennaPattern {
    pub boresight_gain_dbi: f64,
    pub hpbw_deg: f64,
    pub sidelobe_floor_dbi: f64,
}

impl AntennaPattern {
    pub const DEFAULT_SIDELOBE_FLOOR_DBI: f64 = -10.0;

    pub fn new(boresight_gain_dbi: f64, hpbw_deg: f64, sidelobe_floor_dbi: f64) -> Result<Self> {
        let g0 = finite("boresight gain (dBi)", boresight_gain_dbi)?;
        let floor = finite("sidelobe floor (dBi)", sidelobe_floor_dbi)?;
        if floor >= g0 {
            return Err(Error::Invalid(
                "sidelobe floor must be below the boresight gain",
            ));
        }
        Ok(Self {
            boresight_gain_dbi: g0,
            hpbw_deg: positive("half-power beamwidth (deg)", hpbw_deg)?,
            sidelobe_floor_dbi: floor,
        })
    }

    /// Gain `off_boresight_deg` away from boresight, dBi. The pattern is symmetric.
    pub fn gain_dbi(&self, off_boresight_deg: f64) -> f64 {
        let x = off_boresight_deg / self.hpbw_deg;
        (self.boresight_gain_dbi - 12.0 * x * x).max(self.sidelobe_floor_dbi)
    }
}

pub fn pattern_gain(p: &AntennaPattern, off_boresight_deg: f64) -> f64 {
    p.gain_dbi(off_boresight_deg)
}

/// A ground transmitter: conducted power plus a steerable antenna.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundEmitter {
    pub tx_power_dbm: f64,
    pub pattern: AntennaPattern,
}

/// Interference a single ground emitter delivers to a satellite, dBm.
///
/// The emitter points its main beam at `pointing_elevation_deg`; the
/// satellite sits at `satellite_elevation_deg` in the same azimuth, so the
/// off-boresight angle is their difference. The satellite antenna is taken
/// as isotropic.
pub fn uplink_interference_at_satellite(
    emitter: &GroundEmitter,
    pointing_elevation_deg: f64,
    satellite_elevation_deg: f64,
    cfg: &NtnLinkConfig,
) -> Result<Decibel> {
    let pointing = in_range(
        "pointing elevation (deg)",
        pointing_elevation_deg,
        MIN_ELEVATION_DEG,
        90.0,
    )?;
    let satellite = in_range(
        "satellite elevation (deg)",
        satellite_elevation_deg,
        MIN_ELEVATION_DEG,
        90.0,
    )?;
    let tx_power = finite("transmit power (dBm)", emitter.tx_power_dbm)?;
    let cfg = NtnLinkConfig {
        elevation_deg: satellite,
        ..*cfg
    };
    let loss = ntn_path_loss(&cfg)?;
    let gain = emitter.pattern.gain_dbi((satellite - pointing).abs());
    Decibel::dbm(tx_power + gain + DEFAULT_SATELLITE_RX_GAIN_DBI - loss.total_db())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atmosphere::AtmosphereProfile;
    use crate::units::FrequencyGHz;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn dbm(x: f64) -> Decibel {
        Decibel::dbm(x).unwrap()
    }

    fn horn() -> AntennaPattern {
        AntennaPattern::new(15.0, 8.0, -10.0).unwrap()
    }

    #[test]
    fn threshold_examples() {
        let leo = RadiometerSpec::new(0.1, 200e6, 7.0).unwrap();
        let t = interference_threshold(&leo).unwrap().value();
        // -125.5909 dBm noise-equivalent power less 7 dB.
        assert_abs_diff_eq!(t, -132.5909, epsilon = 1e-4);
        assert!((t - -133.0).abs() <= 0.5);
        let bare = RadiometerSpec::new(0.1, 200e6, 0.0).unwrap();
        assert_abs_diff_eq!(
            interference_threshold(&bare).unwrap().value(),
            10.0 * libm::log10(1.38e-23 * 0.1 * 200e6 * 1e3),
            epsilon = 1e-12
        );
        let wide = RadiometerSpec::new(0.1, 400e6, 7.0).unwrap();
        assert_abs_diff_eq!(
            interference_threshold(&wide).unwrap().value() - t,
            3.0103,
            epsilon = 1e-4
        );
    }

    #[test]
    fn radiometer_validation() {
        assert!(RadiometerSpec::new(0.0, 200e6, 7.0).is_err());
        assert!(RadiometerSpec::new(0.1, -1.0, 7.0).is_err());
        assert!(RadiometerSpec::new(0.1, 200e6, -1.0).is_err());
    }

    #[test]
    fn aggregate_examples() {
        assert_abs_diff_eq!(
            aggregate_interference(dbm(-201.2), 1.0).unwrap().value(),
            -201.2
        );
        assert_abs_diff_eq!(
            aggregate_interference(dbm(-201.2), 6.6e6).unwrap().value(),
            -133.0,
            epsilon = 0.05
        );
        assert_abs_diff_eq!(
            aggregate_interference(dbm(-100.0), 100.0).unwrap().value(),
            -80.0,
            epsilon = 1e-12
        );
        assert!(aggregate_interference(dbm(-100.0), 0.0).is_err());
        assert!(aggregate_interference(Decibel::relative(1.0).unwrap(), 2.0).is_err());
    }

    #[test]
    fn max_devices_examples() {
        let n = max_devices(dbm(-201.2), dbm(-133.0)).unwrap();
        assert_relative_eq!(n.devices, 6.6e6, max_relative = 0.02);
        assert_eq!(n.whole_devices, libm::floor(n.devices) as u64);
        assert!(!n.exceeded);
        let ten = max_devices(dbm(-50.0), dbm(-40.0)).unwrap();
        assert_relative_eq!(ten.devices, 10.0, max_relative = 1e-12);
        let over = max_devices(dbm(-130.0), dbm(-133.0)).unwrap();
        assert!(over.exceeded);
        assert_eq!(over.devices, 0.0);
        assert_eq!(over.whole_devices, 0);
    }

    #[test]
    fn pattern_examples() {
        let p = horn();
        assert_eq!(pattern_gain(&p, 0.0), 15.0);
        assert_abs_diff_eq!(pattern_gain(&p, 4.0), 12.0, epsilon = 1e-12);
        assert_eq!(pattern_gain(&p, 60.0), -10.0);
        assert!(AntennaPattern::new(15.0, 8.0, 15.0).is_err());
        assert!(AntennaPattern::new(15.0, 0.0, -10.0).is_err());
    }

    fn leo_cfg() -> NtnLinkConfig {
        NtnLinkConfig::line_of_sight(
            FrequencyGHz::new(165.0).unwrap(),
            400.0,
            10.0,
            AtmosphereProfile::standard(),
        )
    }

    fn emitter() -> GroundEmitter {
        GroundEmitter {
            tx_power_dbm: 10.0 * libm::log10(200.0),
            pattern: horn(),
        }
    }

    #[test]
    fn horizon_pointing_hits_the_floor() {
        let cfg = leo_cfg();
        let on = uplink_interference_at_satellite(&emitter(), 90.0, 90.0, &cfg)
            .unwrap()
            .value();
        let off = uplink_interference_at_satellite(&emitter(), 0.5, 90.0, &cfg)
            .unwrap()
            .value();
        assert_abs_diff_eq!(on - off, 25.0, epsilon = 1e-9);
    }

    #[test]
    fn boresight_matches_link_budget() {
        let cfg = leo_cfg();
        let i = uplink_interference_at_satellite(&emitter(), 10.0, 10.0, &cfg)
            .unwrap()
            .value();
        let pl = ntn_path_loss(&cfg).unwrap().total_db();
        assert_abs_diff_eq!(i, 10.0 * libm::log10(200.0) + 15.0 - pl, epsilon = 1e-9);
        assert!(uplink_interference_at_satellite(&emitter(), 0.1, 10.0, &cfg).is_err());
    }

    #[test]
    fn lower_satellite_sees_less() {
        let cfg = leo_cfg();
        let mut last = f64::INFINITY;
        for elev in [90.0, 70.0, 50.0, 30.0, 20.0, 10.0] {
            // Keep the pointing offset fixed at 5 degrees.
            let i = uplink_interference_at_satellite(&emitter(), elev - 5.0, elev, &cfg)
                .unwrap()
                .value();
            assert!(i < last, "elevation {elev}");
            last = i;
        }
    }

    proptest! {
        #[test]
        fn max_devices_round_trips(single in -250.0f64..-100.0, headroom in 0.001f64..120.0) {
            let t = single + headroom;
            let n = max_devices(dbm(single), dbm(t)).unwrap();
            let back = aggregate_interference(dbm(single), n.devices.max(1.0)).unwrap().value();
            prop_assert!((back - t).abs() < 1e-9);
        }

        #[test]
        fn margin_is_additive(m in 0.0f64..30.0, x in 0.0f64..30.0) {
            let a = interference_threshold(&RadiometerSpec::new(0.1, 200e6, m).unwrap()).unwrap().value();
            let b = interference_threshold(&RadiometerSpec::new(0.1, 200e6, m + x).unwrap()).unwrap().value();
            prop_assert!((a - x - b).abs() < 1e-9);
        }

        #[test]
        fn pattern_monotone_and_bounded(a in 0.0f64..180.0, b in 0.0f64..180.0, floor in -40.0f64..10.0) {
            let p = AntennaPattern::new(15.0, 8.0, floor).unwrap();
            let (near, far) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(p.gain_dbi(far) <= p.gain_dbi(near));
            prop_assert!(p.gain_dbi(far) >= floor);
        }
    }

    #[test]
    fn pattern_continuous_at_clamp() {
        let p = horn();
        // 15 - 12 (θ/8)² = -10  ⇒  θ = 8·sqrt(25/12)
        let knee = 8.0 * libm::sqrt(25.0 / 12.0);
        assert_abs_diff_eq!(
            p.gain_dbi(knee - 1e-9),
            p.gain_dbi(knee + 1e-9),
            epsilon = 1e-6
        );
    }
}
