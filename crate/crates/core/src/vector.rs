use std::fmt;

use crate::error::{Error, Result};

/// A named, finite, non-empty real vector.
///
/// Construction is the only place the invariants are checked, so every
/// function taking a `Vector` may assume at least one component and no
/// NaN or infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    id: String,
    components: Vec<f64>,
}

impl Vector {
    pub fn new(id: impl Into<String>, components: Vec<f64>) -> Result<Self> {
        let id = id.into();
        if components.is_empty() {
            return Err(Error::EmptyVector { id });
        }
        if let Some(index) = components.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteComponent { id, index });
        }
        Ok(Vector { id, components })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    /// True when every component is exactly zero. Zero vectors are valid
    /// inputs everywhere except cosine-dependent computations.
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|&c| c == 0.0)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = [", self.id)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An angle in degrees, confined to the closed interval [0, 180].
///
/// This is the range `acos` can produce, so any value outside it signals a
/// computation error rather than a legitimate geometry.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AngleDeg(f64);

impl AngleDeg {
    pub fn new(degrees: f64) -> Result<Self> {
        if !(0.0..=180.0).contains(&degrees) {
            return Err(Error::OutOfRange {
                value: degrees,
                lo: 0.0,
                hi: 180.0,
            });
        }
        Ok(AngleDeg(degrees))
    }

    pub fn degrees(self) -> f64 {
        self.0
    }
}

impl fmt::Display for AngleDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.1}\u{b0}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_component_list() {
        let err = Vector::new("u", vec![]).unwrap_err();
        assert_eq!(err, Error::EmptyVector { id: "u".into() });
    }

    #[test]
    fn rejects_nan_and_infinity() {
        let err = Vector::new("u", vec![1.0, f64::NAN]).unwrap_err();
        assert_eq!(
            err,
            Error::NonFiniteComponent {
                id: "u".into(),
                index: 1
            }
        );
        assert!(Vector::new("u", vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn zero_detection_covers_negative_zero() {
        assert!(Vector::new("o", vec![0.0, -0.0]).unwrap().is_zero());
        assert!(!Vector::new("u", vec![0.0, 1e-300]).unwrap().is_zero());
    }

    #[test]
    fn display_shows_id_and_components() {
        let v = Vector::new("w", vec![0.0, 2.0]).unwrap();
        assert_eq!(v.to_string(), "w = [0, 2]");
    }

    #[test]
    fn angle_bounds_are_closed() {
        assert!(AngleDeg::new(0.0).is_ok());
        assert!(AngleDeg::new(180.0).is_ok());
        assert!(AngleDeg::new(180.0001).is_err());
        assert!(AngleDeg::new(-0.0001).is_err());
    }

    #[test]
    fn angle_display_uses_one_decimal_and_degree_sign() {
        assert_eq!(AngleDeg::new(63.435).unwrap().to_string(), "63.4\u{b0}");
        assert_eq!(AngleDeg::new(180.0).unwrap().to_string(), "180.0\u{b0}");
    }
}
