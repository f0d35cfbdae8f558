//! Constant excess loss over free space, fitted to measured links.
//!
//! Each record yields `excess = (P_tx + G_tx + G_rx − P_rx) − FSPL(f, d)`. The
//! least-squares constant is the mean excess; spread is the population
//! standard deviation (divisor `n`).

use alloc::vec::Vec;

use crate::error::{finite, positive, Error, Result};
use crate::path::fspl;
use crate::units::FrequencyGHz;

/// Records whose frequencies differ by more than this cannot share one fit.
pub const FREQUENCY_TOLERANCE_GHZ: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementRecord {
    pub distance_m: f64,
    pub tx_power_dbm: f64,
    pub tx_gain_dbi: f64,
    pub rx_gain_dbi: f64,
    pub rx_power_dbm: f64,
    pub frequency: FrequencyGHz,
}

impl MeasurementRecord {
    pub fn validate(&self) -> Result<()> {
        positive("distance (m)", self.distance_m)?;
        finite("transmit power (dBm)", self.tx_power_dbm)?;
        finite("transmit gain (dBi)", self.tx_gain_dbi)?;
        finite("receive gain (dBi)", self.rx_gain_dbi)?;
        finite("received power (dBm)", self.rx_power_dbm)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcessLossFit {
    pub mean_excess_db: f64,
    pub std_dev_db: f64,
    pub n_records: usize,
}

/// Measured loss beyond free space for one record, dB.
pub fn excess_loss(rec: &MeasurementRecord) -> Result<f64> {
    rec.validate()?;
    let measured = rec.tx_power_dbm + rec.tx_gain_dbi + rec.rx_gain_dbi - rec.rx_power_dbm;
    Ok(measured - fspl(rec.frequency, rec.distance_m)?.value())
}

pub fn fit_excess_loss(records: &[MeasurementRecord]) -> Result<ExcessLossFit> {
    if records.is_empty() {
        return Err(Error::Empty("measurement records"));
    }
    let (lo, hi) = records
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.frequency.ghz()), hi.max(r.frequency.ghz()))
        });
    if hi - lo > FREQUENCY_TOLERANCE_GHZ {
        return Err(Error::Invalid(
            "records span more than 1 GHz of carrier frequency",
        ));
    }
    let excess = records
        .iter()
        .map(excess_loss)
        .collect::<Result<Vec<_>>>()?;
    let n = excess.len() as f64;
    let mean = excess.iter().sum::<f64>() / n;
    let var = excess.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    Ok(ExcessLossFit {
        mean_excess_db: mean,
        std_dev_db: libm::sqrt(var),
        n_records: excess.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn record(distance_m: f64, offset_db: f64) -> MeasurementRecord {
        let f = FrequencyGHz::new(142.0).unwrap();
        let free = fspl(f, distance_m).unwrap().value();
        MeasurementRecord {
            distance_m,
            tx_power_dbm: 0.0,
            tx_gain_dbi: 27.0,
            rx_gain_dbi: 27.0,
            rx_power_dbm: 54.0 - free - offset_db,
            frequency: f,
        }
    }

    #[test]
    fn free_space_record_has_no_excess() {
        assert_abs_diff_eq!(
            excess_loss(&record(70.0, 0.0)).unwrap(),
            0.0,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(
            excess_loss(&record(70.0, 7.1)).unwrap(),
            7.1,
            epsilon = 1e-9
        );
    }

    #[test]
    fn doubling_distance_at_fixed_power() {
        let near = record(50.0, 3.0);
        let far = MeasurementRecord {
            distance_m: 100.0,
            ..near
        };
        let drop = excess_loss(&near).unwrap() - excess_loss(&far).unwrap();
        assert_abs_diff_eq!(drop, 6.0206, epsilon = 1e-4);
    }

    #[test]
    fn noiseless_offset_is_recovered() {
        let recs: Vec<_> = (0..10)
            .map(|i| record(40.0 + 15.0 * i as f64, 7.1))
            .collect();
        let fit = fit_excess_loss(&recs).unwrap();
        assert_abs_diff_eq!(fit.mean_excess_db, 7.1, epsilon = 1e-9);
        assert!(fit.std_dev_db < 1e-9);
        assert_eq!(fit.n_records, 10);
    }

    #[test]
    fn two_point_population_spread() {
        let fit = fit_excess_loss(&[record(40.0, 5.0), record(90.0, 9.0)]).unwrap();
        assert_abs_diff_eq!(fit.mean_excess_db, 7.0, epsilon = 1e-9);
        assert_abs_diff_eq!(fit.std_dev_db, 2.0, epsilon = 1e-9);
        assert_eq!(fit.n_records, 2);
    }

    #[test]
    fn single_record() {
        let fit = fit_excess_loss(&[record(40.0, -1.5)]).unwrap();
        assert_abs_diff_eq!(fit.mean_excess_db, -1.5, epsilon = 1e-9);
        assert_eq!(fit.std_dev_db, 0.0);
    }

    #[test]
    fn rejects_bad_corpora() {
        assert!(matches!(fit_excess_loss(&[]), Err(Error::Empty(_))));
        let mut other = record(40.0, 0.0);
        other.frequency = FrequencyGHz::new(145.0).unwrap();
        assert!(fit_excess_loss(&[record(40.0, 0.0), other]).is_err());
        let mut bad = record(40.0, 0.0);
        bad.distance_m = 0.0;
        assert!(excess_loss(&bad).is_err());
    }

    proptest! {
        #[test]
        fn order_and_shift_invariance(
            offsets in proptest::collection::vec(-10.0f64..20.0, 1..20),
            c in -5.0f64..5.0,
        ) {
            let recs: Vec<_> = offsets.iter().enumerate().map(|(i, &o)| record(30.0 + 10.0 * i as f64, o)).collect();
            let fit = fit_excess_loss(&recs).unwrap();
            let mut rev = recs.clone();
            rev.reverse();
            let fit_rev = fit_excess_loss(&rev).unwrap();
            prop_assert!((fit.mean_excess_db - fit_rev.mean_excess_db).abs() < 1e-9);
            prop_assert!((fit.std_dev_db - fit_rev.std_dev_db).abs() < 1e-9);
            let shifted: Vec<_> = recs.iter().map(|r| MeasurementRecord { rx_power_dbm: r.rx_power_dbm - c, ..*r }).collect();
            let fit_s = fit_excess_loss(&shifted).unwrap();
            prop_assert!((fit_s.mean_excess_db - fit.mean_excess_db - c).abs() < 1e-9);
            prop_assert!((fit_s.std_dev_db - fit.std_dev_db).abs() < 1e-9);
        }
    }
}
