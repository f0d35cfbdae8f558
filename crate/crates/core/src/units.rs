//! Scalar quantities and decibel arithmetic.

use core::fmt;

use crate::error::{finite, non_negative, positive, Error, Result};

/// Boltzmann's constant in J/K, rounded to three significant figures.
///
/// The interference budgets in this crate are quoted against this rounded
/// value, not the CODATA one (1.380649e-23).
pub const BOLTZMANN: f64 = 1.38e-23;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Carrier frequency in gigahertz.
///
/// Only positivity is checked here; each model enforces its own validity band.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FrequencyGHz(pub(crate) f64);

impl FrequencyGHz {
    pub fn new(ghz: f64) -> Result<Self> {
        positive("frequency (GHz)", ghz).map(Self)
    }

    pub fn ghz(self) -> f64 {
        self.0
    }

    pub fn hz(self) -> f64 {
        self.0 * 1e9
    }
}

impl fmt::Display for FrequencyGHz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} GHz", self.0)
    }
}

/// Power in watts.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerWatts(f64);

impl PowerWatts {
    pub fn new(watts: f64) -> Result<Self> {
        non_negative("power (W)", watts).map(Self)
    }

    pub fn watts(self) -> f64 {
        self.0
    }
}

/// Whether a decibel value is a ratio (dB) or an absolute power (dBm).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DbKind {
    Relative,
    Absolute,
}

impl DbKind {
    fn name(self) -> &'static str {
        match self {
            DbKind::Relative => "relative (dB)",
            DbKind::Absolute => "absolute (dBm)",
        }
    }
}

/// A decibel value tagged with its kind.
///
/// Arithmetic follows the usual link-budget rules: a gain or loss may be
/// applied to a power level, ratios combine freely, and the difference of
/// two power levels is a ratio. Summing two power levels in the log domain
/// is meaningless and is rejected; use [`power_sum_db`] for that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decibel {
    value: f64,
    kind: DbKind,
}

impl Decibel {
    pub fn relative(db: f64) -> Result<Self> {
        Ok(Self {
            value: finite("dB value", db)?,
            kind: DbKind::Relative,
        })
    }

    pub fn dbm(dbm: f64) -> Result<Self> {
        Ok(Self {
            value: finite("dBm value", dbm)?,
            kind: DbKind::Absolute,
        })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    pub fn kind(self) -> DbKind {
        self.kind
    }

    pub fn is_absolute(self) -> bool {
        self.kind == DbKind::Absolute
    }

    pub fn checked_add(self, rhs: Decibel) -> Result<Decibel> {
        let kind = match (self.kind, rhs.kind) {
            (DbKind::Absolute, DbKind::Absolute) => {
                return Err(Error::KindMismatch {
                    op: "add",
                    lhs: self.kind.name(),
                    rhs: rhs.kind.name(),
                })
            }
            (DbKind::Relative, DbKind::Relative) => DbKind::Relative,
            _ => DbKind::Absolute,
        };
        Ok(Decibel {
            value: self.value + rhs.value,
            kind,
        })
    }

    pub fn checked_sub(self, rhs: Decibel) -> Result<Decibel> {
        let kind = match (self.kind, rhs.kind) {
            (DbKind::Absolute, DbKind::Absolute) | (DbKind::Relative, DbKind::Relative) => {
                DbKind::Relative
            }
            (DbKind::Absolute, DbKind::Relative) => DbKind::Absolute,
            (DbKind::Relative, DbKind::Absolute) => {
                return Err(Error::KindMismatch {
                    op: "subtract",
                    lhs: self.kind.name(),
                    rhs: rhs.kind.name(),
                })
            }
        };
        Ok(Decibel {
            value: self.value - rhs.value,
            kind,
        })
    }
}

impl fmt::Display for Decibel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.kind {
            DbKind::Relative => "dB",
            DbKind::Absolute => "dBm",
        };
        match f.precision() {
            Some(p) => write!(f, "{:.*} {}", p, self.value, unit),
            None => write!(f, "{} {}", self.value, unit),
        }
    }
}

/// `10·log10(p / 1 mW)`.
pub fn dbm_from_watts(p: PowerWatts) -> Result<Decibel> {
    let w = positive("power (W)", p.watts())?;
    Decibel::dbm(10.0 * libm::log10(w * 1e3))
}

pub fn watts_from_dbm(x: Decibel) -> Result<PowerWatts> {
    if !x.is_absolute() {
        return Err(Error::KindMismatch {
            op: "convert to watts",
            lhs: x.kind.name(),
            rhs: DbKind::Absolute.name(),
        });
    }
    PowerWatts::new(libm::pow(10.0, x.value / 10.0) * 1e-3)
}

/// Non-coherent (power) sum of absolute levels.
pub fn power_sum_db(levels: &[Decibel]) -> Result<Decibel> {
    if levels.is_empty() {
        return Err(Error::Empty("power level list"));
    }
    if let Some(bad) = levels.iter().find(|l| !l.is_absolute()) {
        return Err(Error::KindMismatch {
            op: "power-sum",
            lhs: bad.kind.name(),
            rhs: DbKind::Absolute.name(),
        });
    }
    // Factor out the largest level so very small dBm values do not underflow.
    let peak = levels
        .iter()
        .map(|l| l.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = levels
        .iter()
        .map(|l| libm::pow(10.0, (l.value - peak) / 10.0))
        .sum();
    Decibel::dbm(peak + 10.0 * libm::log10(sum))
}

/// Linear power ratio to dB.
pub(crate) fn db_from_ratio(ratio: f64) -> f64 {
    10.0 * libm::log10(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn dbm(x: f64) -> Decibel {
        Decibel::dbm(x).unwrap()
    }

    #[test]
    fn watts_to_dbm_examples() {
        let tx = dbm_from_watts(PowerWatts::new(0.2).unwrap()).unwrap();
        assert_abs_diff_eq!(tx.value(), 23.0103, epsilon = 1e-4);
        assert!(tx.is_absolute());
        assert_abs_diff_eq!(
            dbm_from_watts(PowerWatts::new(1.0).unwrap())
                .unwrap()
                .value(),
            30.0,
            epsilon = 1e-12
        );
        // k * 0.1 K * 200 MHz = 2.76e-16 W; 10*log10(2.76e-13) = -125.5909 (hand calculation)
        let noise = dbm_from_watts(PowerWatts::new(2.76e-16).unwrap()).unwrap();
        assert_abs_diff_eq!(noise.value(), -125.5909, epsilon = 1e-4);
    }

    #[test]
    fn zero_or_negative_power_rejected() {
        assert!(dbm_from_watts(PowerWatts::new(0.0).unwrap()).is_err());
        assert!(PowerWatts::new(-1.0).is_err());
    }

    #[test]
    fn dbm_to_watts_examples() {
        assert_abs_diff_eq!(
            watts_from_dbm(dbm(30.0)).unwrap().watts(),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            watts_from_dbm(dbm(0.0)).unwrap().watts(),
            1e-3,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            watts_from_dbm(dbm(23.01)).unwrap().watts(),
            0.2,
            epsilon = 1e-4
        );
        let rel = Decibel::relative(3.0).unwrap();
        assert!(matches!(
            watts_from_dbm(rel),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn power_sum_examples() {
        assert_abs_diff_eq!(
            power_sum_db(&[dbm(-100.0)]).unwrap().value(),
            -100.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            power_sum_db(&[dbm(-100.0), dbm(-100.0)]).unwrap().value(),
            -96.9897,
            epsilon = 1e-4
        );
        let ten = vec![dbm(-201.2); 10];
        assert_abs_diff_eq!(power_sum_db(&ten).unwrap().value(), -191.2, epsilon = 1e-9);
        assert!(matches!(power_sum_db(&[]), Err(Error::Empty(_))));
        assert!(power_sum_db(&[Decibel::relative(1.0).unwrap()]).is_err());
    }

    #[test]
    fn decibel_kind_rules() {
        let a = dbm(10.0);
        let g = Decibel::relative(3.0).unwrap();
        assert!(a.checked_add(a).is_err());
        assert_eq!(a.checked_add(g).unwrap(), dbm(13.0));
        assert_eq!(g.checked_add(a).unwrap(), dbm(13.0));
        assert_eq!(g.checked_add(g).unwrap().kind(), DbKind::Relative);
        assert_eq!(a.checked_sub(g).unwrap(), dbm(7.0));
        assert_eq!(a.checked_sub(a).unwrap().kind(), DbKind::Relative);
        assert!(g.checked_sub(a).is_err());
        assert!(Decibel::dbm(f64::NAN).is_err());
    }

    #[test]
    fn frequency_must_be_positive() {
        assert!(FrequencyGHz::new(0.0).is_err());
        assert!(FrequencyGHz::new(-3.0).is_err());
        assert!(FrequencyGHz::new(f64::INFINITY).is_err());
        assert_eq!(FrequencyGHz::new(140.0).unwrap().hz(), 140e9);
    }

    proptest! {
        #[test]
        fn dbm_round_trip(x in -300.0f64..100.0) {
            let back = dbm_from_watts(watts_from_dbm(dbm(x)).unwrap()).unwrap();
            prop_assert!((back.value() - x).abs() < 1e-9);
        }

        #[test]
        fn power_sum_permutation_and_association(
            levels in proptest::collection::vec(-250.0f64..50.0, 1..12),
            split in 0usize..12,
        ) {
            let ds: alloc::vec::Vec<Decibel> = levels.iter().map(|&x| dbm(x)).collect();
            let whole = power_sum_db(&ds).unwrap().value();
            let mut rev = ds.clone();
            rev.reverse();
            prop_assert!((power_sum_db(&rev).unwrap().value() - whole).abs() < 1e-9);
            let k = split.min(ds.len() - 1).max(1);
            if k < ds.len() {
                let left = power_sum_db(&ds[..k]).unwrap();
                let right = power_sum_db(&ds[k..]).unwrap();
                let nested = power_sum_db(&[left, right]).unwrap().value();
                prop_assert!((nested - whole).abs() < 1e-9);
            }
        }
    }
}
