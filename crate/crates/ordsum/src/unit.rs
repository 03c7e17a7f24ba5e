//! The closed unit interval `[0, 1]`, carrier of every connective.

use crate::error::{Error, Result};
use std::fmt;

/// A real number confined to `[0, 1]`. Out-of-range and NaN inputs are
/// rejected at construction, so a `UnitValue` is always a valid argument.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || !(0.0..=1.0).contains(&value) {
            Err(Error::OutOfUnitRange(value))
        } else {
            Ok(UnitValue(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for UnitValue {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        UnitValue::new(value)
    }
}

impl From<UnitValue> for f64 {
    fn from(v: UnitValue) -> f64 {
        v.0
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Evenly spaced grid over `[0, 1]` with `points` samples, endpoints included.
/// `points = 1001` yields `{0, 1/1000, ..., 1}`.
pub fn unit_grid(points: usize) -> impl Iterator<Item = f64> {
    let n = points.max(2);
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

/// Checks that an evaluation argument lies in `[0, 1]`.
pub(crate) fn check_unit(x: f64) -> Result<()> {
    if x.is_nan() || !(0.0..=1.0).contains(&x) {
        Err(Error::OutOfUnitRange(x))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(UnitValue::new(-0.1).is_err());
        assert!(UnitValue::new(1.1).is_err());
        assert!(UnitValue::new(f64::NAN).is_err());
        assert!(UnitValue::new(0.0).is_ok());
        assert!(UnitValue::new(1.0).is_ok());
    }

    #[test]
    fn grid_hits_endpoints_exactly() {
        let g: Vec<f64> = unit_grid(1001).collect();
        assert_eq!(g.len(), 1001);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1000], 1.0);
        assert_eq!(g[500], 0.5);
    }
}
