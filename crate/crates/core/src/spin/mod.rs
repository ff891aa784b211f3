//! Finite-dimensional representation theory of `SU(2)` and `SL(2,C)`.
//!
//! Everything is expressed in the weight basis: index `k = 0, …, 2s` carries the
//! `S_z` eigenvalue `m = s − k`, and the raising and lowering operators have
//! real non-negative entries.
//!
//! ```
//! use modnet::spin::{decompose_counterexample, SpinLabel};
//!
//! let table = decompose_counterexample(0, SpinLabel::ZERO, 5.0).unwrap();
//! let spins: Vec<f64> = table.records.iter().map(|r| r.spin.value()).collect();
//! assert_eq!(spins, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
//! assert!(table.records.iter().all(|r| r.multiplicity == 1));
//! ```

mod decomposition;
mod kinematics;
mod rep;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use decomposition::{
    clebsch_multiplicities, decompose_counterexample, restriction_spins, SpinDecomposition, SpinRecord,
};
pub use kinematics::{boost_matrix, transformed_cocycle, wigner_rotation};
pub use rep::{casimir, spin_matrices, symmetric_power, wigner_d};

/// A spin `s ∈ ½ℕ`, stored as the integer `2s`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinLabel {
    twice: u32,
}

impl SpinLabel {
    pub const ZERO: SpinLabel = SpinLabel { twice: 0 };
    pub const HALF: SpinLabel = SpinLabel { twice: 1 };
    pub const ONE: SpinLabel = SpinLabel { twice: 2 };

    pub const fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    /// Accepts `s` when `2s` is a non-negative integer (up to `1e-9`).
    pub fn new(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        let rounded = twice.round();
        if !s.is_finite() || (twice - rounded).abs() > 1e-9 || rounded < 0.0 || rounded > u32::MAX as f64 {
            return Err(Error::InvalidSpin(if twice.is_finite() { twice.round() as i64 } else { -1 }));
        }
        Ok(Self { twice: rounded as u32 })
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// `2s + 1`.
    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// `S_z` eigenvalue of weight-basis index `k`.
    pub fn weight(self, k: usize) -> f64 {
        self.value() - k as f64
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinLabel({self})")
    }
}

impl Serialize for SpinLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}

impl<'de> Deserialize<'de> for SpinLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = f64::deserialize(deserializer)?;
        SpinLabel::new(s).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for SpinLabel {
    type Err = Error;

    /// Parses `"3/2"`, `"1.5"` or `"2"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Invalid(format!("cannot parse spin label {text:?}"));
        if let Some((num, den)) = text.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "2" => Ok(Self::from_twice(num)),
                "1" => Ok(Self::from_twice(2 * num)),
                _ => Err(bad()),
            }
        } else {
            SpinLabel::new(text.parse::<f64>().map_err(|_| bad())?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_parse_and_print() {
        assert_eq!("3/2".parse::<SpinLabel>().unwrap(), SpinLabel::from_twice(3));
        assert_eq!("1.5".parse::<SpinLabel>().unwrap(), SpinLabel::from_twice(3));
        assert_eq!("2".parse::<SpinLabel>().unwrap().to_string(), "2");
        assert_eq!(SpinLabel::HALF.to_string(), "1/2");
        assert!(SpinLabel::new(0.3).is_err());
        assert!(SpinLabel::new(-1.0).is_err());
        assert!("x/2".parse::<SpinLabel>().is_err());
        let json = serde_json::to_string(&SpinLabel::from_twice(5)).unwrap();
        assert_eq!(json, "2.5");
        assert_eq!(serde_json::from_str::<SpinLabel>(&json).unwrap().twice(), 5);
    }
}
