//! Numeric grids given on the command line.
//!
//! A single item is either a value (`300`) or an inclusive sweep
//! `start:stop:step` (`1:1000:0.5`). A grid is a comma-separated list of
//! items, expanded in the order written.

use std::fmt;
use std::str::FromStr;

/// Upper bound on the number of points a sweep may expand to.
pub const MAX_SWEEP_POINTS: f64 = 1e7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    start: f64,
    stop: f64,
    step: f64,
}

impl SweepSpec {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, String> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err("sweep bounds and step must be finite".into());
        }
        if step <= 0.0 {
            return Err(format!("sweep step must be positive, got {step}"));
        }
        if start > stop {
            return Err(format!("sweep start {start} is above stop {stop}"));
        }
        if (stop - start) / step > MAX_SWEEP_POINTS {
            return Err(format!(
                "sweep {start}:{stop}:{step} exceeds {MAX_SWEEP_POINTS} points"
            ));
        }
        Ok(Self { start, stop, step })
    }

    pub fn single(value: f64) -> Result<Self, String> {
        if !value.is_finite() {
            return Err(format!("value must be finite, got {value}"));
        }
        Ok(Self {
            start: value,
            stop: value,
            step: 1.0,
        })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// `start, start + step, ...`, keeping points up to half a step past
    /// `stop`. A final point that overshoots `stop` is pulled back onto it.
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 0.5).floor() as usize;
        (0..=n)
            .map(|i| self.start + i as f64 * self.step)
            .map(|x| x.min(self.stop))
            .collect()
    }
}

impl FromStr for SweepSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |p: &str| {
            p.parse::<f64>()
                .map_err(|_| format!("`{p}` is not a number"))
        };
        match parts.as_slice() {
            [v] => SweepSpec::single(num(v)?),
            [a, b, c] => SweepSpec::new(num(a)?, num(b)?, num(c)?),
            _ => Err(format!("`{s}` is neither a value nor start:stop:step")),
        }
    }
}

impl fmt::Display for SweepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.stop {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}:{}:{}", self.start, self.stop, self.step)
        }
    }
}

/// Comma-separated list of values and sweeps.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid(Vec<SweepSpec>);

impl Grid {
    pub fn from_values(values: &[f64]) -> Self {
        Grid(
            values
                .iter()
                .map(|&v| SweepSpec {
                    start: v,
                    stop: v,
                    step: 1.0,
                })
                .collect(),
        )
    }

    pub fn values(&self) -> Vec<f64> {
        self.0.iter().flat_map(SweepSpec::values).collect()
    }

    /// The grid as a single sweep, when it is one.
    pub fn as_single_sweep(&self) -> Option<SweepSpec> {
        match self.0.as_slice() {
            [s] => Some(*s),
            _ => None,
        }
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let items = s
            .split(',')
            .map(SweepSpec::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        let total: f64 = items
            .iter()
            .map(|i| (i.stop - i.start) / i.step + 1.0)
            .sum();
        if total > MAX_SWEEP_POINTS {
            return Err(format!("grid `{s}` exceeds {MAX_SWEEP_POINTS} points"));
        }
        Ok(Grid(items))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_value() {
        let g: Grid = "300".parse().unwrap();
        assert_eq!(g.values(), [300.0]);
    }

    #[test]
    fn inclusive_within_half_step() {
        assert_eq!(
            "1:10:3".parse::<SweepSpec>().unwrap().values(),
            [1.0, 4.0, 7.0, 10.0]
        );
        assert_eq!(
            "1:10:4".parse::<SweepSpec>().unwrap().values(),
            [1.0, 5.0, 9.0]
        );
        assert_eq!(
            "0:10:2.5".parse::<SweepSpec>().unwrap().values(),
            [0.0, 2.5, 5.0, 7.5, 10.0]
        );
        let fine = "1:1000:0.5".parse::<SweepSpec>().unwrap().values();
        assert_eq!(fine.len(), 1999);
        assert_eq!(*fine.last().unwrap(), 1000.0);
    }

    #[test]
    fn lists_concatenate_in_order() {
        let g: Grid = "0.5,1:3:1,10".parse().unwrap();
        assert_eq!(g.values(), [0.5, 1.0, 2.0, 3.0, 10.0]);
        assert!(g.as_single_sweep().is_none());
    }

    #[test]
    fn rejects_bad_sweeps() {
        for bad in [
            "",
            "a",
            "1:2",
            "1:2:0",
            "1:2:-1",
            "5:1:1",
            "1:2:3:4",
            "nan",
            "0:1e9:1e-3",
        ] {
            assert!(bad.parse::<Grid>().is_err(), "{bad}");
        }
    }
}
