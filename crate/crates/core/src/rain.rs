//! Specific attenuation due to rain, `γ_R = k·R^α`.
//!
//! `k` and `α` come from the log-domain Gaussian regressions for horizontal
//! and vertical polarisation (valid 1-1000 GHz). Circular polarisation uses
//! the standard combining rule with a 45° polarisation tilt:
//!
//! ```text
//! k = (k_H + k_V) / 2
//! α = (k_H·α_H + k_V·α_V) / (2k)
//! ```

use crate::error::{in_range, non_negative, Result};
use crate::gas::SpecificAttenuation;
use crate::units::FrequencyGHz;

pub const MIN_FREQUENCY_GHZ: f64 = 1.0;
pub const MAX_FREQUENCY_GHZ: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Polarization {
    #[default]
    Horizontal,
    Vertical,
    Circular,
}

/// Rain rate, mm/h.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RainRate(f64);

impl RainRate {
    pub fn new(mm_per_hour: f64) -> Result<Self> {
        non_negative("rain rate (mm/h)", mm_per_hour).map(Self)
    }

    pub fn mm_per_hour(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainCoefficients {
    pub k: f64,
    pub alpha: f64,
    pub polarization: Polarization,
}

/// One regression: Gaussian terms `(a_j, b_j, c_j)` plus a linear term `m·x + c` in `x = log10 f`.
struct Regression<const N: usize> {
    a: [f64; N],
    b: [f64; N],
    c: [f64; N],
    m: f64,
    offset: f64,
}

impl<const N: usize> Regression<N> {
    fn eval(&self, log_f: f64) -> f64 {
        let gaussians: f64 = (0..N)
            .map(|j| {
                let z = (log_f - self.b[j]) / self.c[j];
                self.a[j] * libm::exp(-z * z)
            })
            .sum();
        gaussians + self.m * log_f + self.offset
    }
}

#[rustfmt::skip]
const K_H: Regression<4> = Regression {
    a: [-5.33980, -0.35351, -0.23789, -0.94158],
    b: [-0.10008, 1.26970, 0.86036, 0.64552],
    c: [1.13098, 0.45400, 0.15354, 0.16817],
    m: -0.18961,
    offset: 0.71147,
};

#[rustfmt::skip]
const K_V: Regression<4> = Regression {
    a: [-3.80595, -3.44965, -0.39902, 0.50167],
    b: [0.56934, -0.22911, 0.73042, 1.07319],
    c: [0.81061, 0.51059, 0.11899, 0.27195],
    m: -0.16398,
    offset: 0.63297,
};

#[rustfmt::skip]
const ALPHA_H: Regression<5> = Regression {
    a: [-0.14318, 0.29591, 0.32177, -5.37610, 16.1721],
    b: [1.82442, 0.77564, 0.63773, -0.96230, -3.29980],
    c: [-0.55187, 0.19822, 0.13164, 1.47828, 3.43990],
    m: 0.67849,
    offset: -1.95537,
};

#[rustfmt::skip]
const ALPHA_V: Regression<5> = Regression {
    a: [-0.07771, 0.56727, -0.20238, -48.2991, 48.5833],
    b: [2.33840, 0.95545, 1.14520, 0.791669, 0.791459],
    c: [-0.76284, 0.54039, 0.26809, 0.116226, 0.116479],
    m: -0.053739,
    offset: 0.83433,
};

pub fn rain_coefficients(f: FrequencyGHz, pol: Polarization) -> Result<RainCoefficients> {
    let f = in_range(
        "frequency (GHz)",
        f.ghz(),
        MIN_FREQUENCY_GHZ,
        MAX_FREQUENCY_GHZ,
    )?;
    let x = libm::log10(f);
    let (k_h, a_h) = (libm::pow(10.0, K_H.eval(x)), ALPHA_H.eval(x));
    let (k_v, a_v) = (libm::pow(10.0, K_V.eval(x)), ALPHA_V.eval(x));
    let (k, alpha) = match pol {
        Polarization::Horizontal => (k_h, a_h),
        Polarization::Vertical => (k_v, a_v),
        Polarization::Circular => {
            let k = 0.5 * (k_h + k_v);
            (k, (k_h * a_h + k_v * a_v) / (2.0 * k))
        }
    };
    Ok(RainCoefficients {
        k,
        alpha,
        polarization: pol,
    })
}

pub fn specific_rain_attenuation(
    f: FrequencyGHz,
    rate: RainRate,
    pol: Polarization,
) -> Result<SpecificAttenuation> {
    let coeffs = rain_coefficients(f, pol)?;
    let r = rate.mm_per_hour();
    let gamma = if r == 0.0 {
        0.0
    } else {
        coeffs.k * libm::pow(r, coeffs.alpha)
    };
    Ok(SpecificAttenuation::new(gamma))
}
