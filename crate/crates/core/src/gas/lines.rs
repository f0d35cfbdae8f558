//! Spectroscopic line tables for the line-by-line gaseous attenuation method.
//!
//! Provenance: Recommendation ITU-R P.676 (Attenuation by atmospheric gases
//! and related effects), Annex 1, Table 1 (oxygen, coefficients a1..a6) and
//! Table 2 (water vapour, coefficients b1..b6), in the scaling used by the
//! 2016 and later editions (a1 in units of 1e-7 and b1 in units of 1e-1 of
//! the line-strength prefactor). The 1780 GHz water-vapour entry is the
//! pseudo-line that carries the water-vapour continuum.

/// One resonance: centre frequency (GHz) and its six shape/intensity coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub center_ghz: f64,
    pub coeffs: [f64; 6],
}

const fn line(center_ghz: f64, coeffs: [f64; 6]) -> SpectralLine {
    SpectralLine { center_ghz, coeffs }
}

/// Oxygen lines, coefficients a1..a6.
#[rustfmt::skip]
pub static OXYGEN_LINES: [SpectralLine; 44] = [
    line(50.474214, [0.975, 9.651, 6.69, 0.0, 2.566, 6.85]),
    line(50.987745, [2.529, 8.653, 7.17, 0.0, 2.246, 6.8]),
    line(51.503360, [6.193, 7.709, 7.64, 0.0, 1.947, 6.729]),
    line(52.021429, [14.32, 6.819, 8.11, 0.0, 1.667, 6.64]),
    line(52.542418, [31.24, 5.983, 8.58, 0.0, 1.388, 6.526]),
    line(53.066934, [64.29, 5.201, 9.06, 0.0, 1.349, 6.206]),
    line(53.595775, [124.6, 4.474, 9.55, 0.0, 2.227, 5.085]),
    line(54.130025, [227.3, 3.8, 9.96, 0.0, 3.17, 3.75]),
    line(54.671180, [389.7, 3.182, 10.37, 0.0, 3.558, 2.654]),
    line(55.221384, [627.1, 2.618, 10.89, 0.0, 2.56, 2.952]),
    line(55.783815, [945.3, 2.109, 11.34, 0.0, -1.172, 6.135]),
    line(56.264774, [543.4, 0.014, 17.03, 0.0, 3.525, -0.978]),
    line(56.363399, [1331.8, 1.654, 11.89, 0.0, -2.378, 6.547]),
    line(56.968211, [1746.6, 1.255, 12.23, 0.0, -3.545, 6.451]),
    line(57.612486, [2120.1, 0.91, 12.62, 0.0, -5.416, 6.056]),
    line(58.323877, [2363.7, 0.621, 12.95, 0.0, -1.932, 0.436]),
    line(58.446588, [1442.1, 0.083, 14.91, 0.0, 6.768, -1.273]),
    line(59.164204, [2379.9, 0.387, 13.53, 0.0, -6.561, 2.309]),
    line(59.590983, [2090.7, 0.207, 14.08, 0.0, 6.957, -0.776]),
    line(60.306056, [2103.4, 0.207, 14.15, 0.0, -6.395, 0.699]),
    line(60.434778, [2438.0, 0.386, 13.39, 0.0, 6.342, -2.825]),
    line(61.150562, [2479.5, 0.621, 12.92, 0.0, 1.014, -0.584]),
    line(61.800158, [2275.9, 0.91, 12.63, 0.0, 5.014, -6.619]),
    line(62.411220, [1915.4, 1.255, 12.17, 0.0, 3.029, -6.759]),
    line(62.486253, [1503.0, 0.083, 15.13, 0.0, -4.499, 0.844]),
    line(62.997984, [1490.2, 1.654, 11.74, 0.0, 1.856, -6.675]),
    line(63.568526, [1078.0, 2.108, 11.34, 0.0, 0.658, -6.139]),
    line(64.127775, [728.7, 2.617, 10.88, 0.0, -3.036, -2.895]),
    line(64.678910, [461.3, 3.181, 10.38, 0.0, -3.968, -2.59]),
    line(65.224078, [274.0, 3.8, 9.96, 0.0, -3.528, -3.68]),
    line(65.764779, [153.0, 4.473, 9.55, 0.0, -2.548, -5.002]),
    line(66.302096, [80.4, 5.2, 9.06, 0.0, -1.66, -6.091]),
    line(66.836834, [39.8, 5.982, 8.58, 0.0, -1.68, -6.393]),
    line(67.369601, [18.56, 6.818, 8.11, 0.0, -1.956, -6.475]),
    line(67.900868, [8.172, 7.708, 7.64, 0.0, -2.216, -6.545]),
    line(68.431006, [3.397, 8.652, 7.17, 0.0, -2.492, -6.6]),
    line(68.960312, [1.334, 9.65, 6.69, 0.0, -2.773, -6.65]),
    line(118.750334, [940.3, 0.01, 16.64, 0.0, -0.439, 0.079]),
    line(368.498246, [67.4, 0.048, 16.4, 0.0, 0.0, 0.0]),
    line(424.763020, [637.7, 0.044, 16.4, 0.0, 0.0, 0.0]),
    line(487.249273, [237.4, 0.049, 16.0, 0.0, 0.0, 0.0]),
    line(715.392902, [98.1, 0.145, 16.0, 0.0, 0.0, 0.0]),
    line(773.839490, [572.3, 0.141, 16.2, 0.0, 0.0, 0.0]),
    line(834.145546, [183.1, 0.145, 14.7, 0.0, 0.0, 0.0]),
];

/// Water-vapour lines, coefficients b1..b6.
#[rustfmt::skip]
pub static WATER_VAPOR_LINES: [SpectralLine; 35] = [
    line(22.235080, [0.1079, 2.144, 26.38, 0.76, 5.087, 1.0]),
    line(67.803960, [0.0011, 8.732, 28.58, 0.69, 4.93, 0.82]),
    line(119.995940, [0.0007, 8.353, 29.48, 0.7, 4.78, 0.79]),
    line(183.310087, [2.273, 0.668, 29.06, 0.77, 5.022, 0.85]),
    line(321.225630, [0.047, 6.179, 24.04, 0.67, 4.398, 0.54]),
    line(325.152888, [1.514, 1.541, 28.23, 0.64, 4.893, 0.74]),
    line(336.227764, [0.001, 9.825, 26.93, 0.69, 4.74, 0.61]),
    line(380.197353, [11.67, 1.048, 28.11, 0.54, 5.063, 0.89]),
    line(390.134508, [0.0045, 7.347, 21.52, 0.63, 4.81, 0.55]),
    line(437.346667, [0.0632, 5.048, 18.45, 0.6, 4.23, 0.48]),
    line(439.150807, [0.9098, 3.595, 20.07, 0.63, 4.483, 0.52]),
    line(443.018343, [0.192, 5.048, 15.55, 0.6, 5.083, 0.5]),
    line(448.001085, [10.41, 1.405, 25.64, 0.66, 5.028, 0.67]),
    line(470.888999, [0.3254, 3.597, 21.34, 0.66, 4.506, 0.65]),
    line(474.689092, [1.26, 2.379, 23.2, 0.65, 4.804, 0.64]),
    line(488.490108, [0.2529, 2.852, 25.86, 0.69, 5.201, 0.72]),
    line(503.568532, [0.0372, 6.731, 16.12, 0.61, 3.98, 0.43]),
    line(504.482692, [0.0124, 6.731, 16.12, 0.61, 4.01, 0.45]),
    line(547.676440, [0.9785, 0.158, 26.0, 0.7, 4.5, 1.0]),
    line(552.020960, [0.184, 0.158, 26.0, 0.7, 4.5, 1.0]),
    line(556.935985, [497.0, 0.159, 30.86, 0.69, 4.552, 1.0]),
    line(620.700807, [5.015, 2.391, 24.38, 0.71, 4.856, 0.68]),
    line(645.766085, [0.0067, 8.633, 18.0, 0.6, 4.0, 0.5]),
    line(658.005280, [0.2732, 7.816, 32.1, 0.69, 4.14, 1.0]),
    line(752.033113, [243.4, 0.396, 30.86, 0.68, 4.352, 0.84]),
    line(841.051732, [0.0134, 8.113, 15.9, 0.33, 5.76, 0.45]),
    line(859.965698, [0.1325, 7.989, 30.6, 0.68, 4.09, 0.84]),
    line(899.303175, [0.0547, 7.845, 29.85, 0.68, 4.53, 0.9]),
    line(902.611085, [0.0386, 8.36, 28.65, 0.7, 5.1, 0.95]),
    line(906.205957, [0.1836, 5.039, 24.08, 0.7, 4.7, 0.53]),
    line(916.171582, [8.4, 1.369, 26.73, 0.7, 5.15, 0.78]),
    line(923.112692, [0.0079, 7.989, 29.0, 0.7, 5.0, 0.8]),
    line(970.315022, [9.009, 0.817, 25.5, 0.64, 4.94, 0.67]),
    line(987.926764, [134.6, 0.31, 29.85, 0.68, 4.55, 0.9]),
    line(1780.000000, [17506.0, 0.0, 196.3, 2.0, 24.15, 5.0]),
];
