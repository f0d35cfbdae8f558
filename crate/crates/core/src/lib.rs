//! Propagation and spectrum-coexistence models for radio links above 100 GHz.
//!
//! The crate is `no_std` (it needs `alloc` for the few operations that return
//! lists) and carries no IO. Everything here is a pure function of its inputs:
//!
//! * [`units`]: frequency, power and decibel bookkeeping.
//! * [`atmosphere`]: the mean annual global reference atmosphere.
//! * [`gas`]: line-by-line oxygen and water-vapour specific attenuation, 1-1000 GHz.
//! * [`rain`]: power-law specific rain attenuation.
//! * [`path`]: free-space loss, spherical-shell slant paths and loss ledgers.
//! * [`ntn`]: ground-to-satellite link budget.
//! * [`coexistence`]: passive radiometer protection thresholds and emitter aggregation.
//! * [`fit`]: excess-loss fitting of measured links against free space.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod atmosphere;
pub mod coexistence;
mod error;
pub mod fit;
pub mod gas;
pub mod ntn;
pub mod path;
pub mod rain;
pub mod units;

pub use error::{Error, Result};
