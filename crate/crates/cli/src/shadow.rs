//! Seeded shadow-fading draws.
//!
//! Shadow fading is normal in dB with zero mean. The loss ledger only holds
//! losses, so a draw that would come out as a gain is recorded as 0 dB.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{CliError, Result};

/// `count` draws of shadow-fading loss, dB, reproducible from `seed`.
pub fn shadow_fading_draws(sigma_db: f64, seed: u64, count: usize) -> Result<Vec<f64>> {
    if !(sigma_db.is_finite() && sigma_db >= 0.0) {
        return Err(CliError::Domain(thzcoex_core::Error::Negative {
            quantity: "shadow-fading spread (dB)",
            value: sigma_db,
        }));
    }
    let normal = Normal::new(0.0, sigma_db).expect("finite non-negative spread");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| normal.sample(&mut rng).max(0.0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_non_negative() {
        let a = shadow_fading_draws(4.0, 7, 1000).unwrap();
        assert_eq!(a, shadow_fading_draws(4.0, 7, 1000).unwrap());
        assert_ne!(a, shadow_fading_draws(4.0, 8, 1000).unwrap());
        assert!(a.iter().all(|&x| x >= 0.0));
        // About half the draws are gains folded to zero.
        let zeros = a.iter().filter(|&&x| x == 0.0).count();
        assert!((400..600).contains(&zeros), "{zeros}");
    }

    #[test]
    fn zero_spread_is_deterministic_median() {
        assert_eq!(shadow_fading_draws(0.0, 1, 3).unwrap(), [0.0; 3]);
        assert!(shadow_fading_draws(-1.0, 1, 1).is_err());
    }
}
