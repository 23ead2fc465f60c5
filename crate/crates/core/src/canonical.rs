//! The canonical mapping space: the closed unit disc paired with the
//! circumscribing square `[-1, 1]²`, plus the numeric guards shared by every
//! mapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::MapError;

/// Accept tolerance for domain membership of constructed points.
pub const EPS_DOMAIN: f64 = 1e-12;

/// Radicands down to `-EPS_CLAMP` are treated as roundoff and clamped to zero.
pub const EPS_CLAMP: f64 = 1e-9;

/// Coordinates within this distance of an axis take the identity fallback.
pub const AXIS_EPS: f64 = 1e-15;

/// A point `(u, v)` of the closed unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscPoint {
    pub u: f64,
    pub v: f64,
}

/// A point `(x, y)` of the closed square `[-1, 1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SquarePoint {
    pub x: f64,
    pub y: f64,
}

impl DiscPoint {
    /// Checked constructor; rejects non-finite input and points farther than
    /// `1 + EPS_DOMAIN` from the origin (measured on `u² + v²`).
    pub fn new(u: f64, v: f64) -> Result<Self, MapError> {
        if !u.is_finite() || !v.is_finite() {
            return Err(MapError::NonFinite);
        }
        let r2 = u * u + v * v;
        if r2 > 1.0 + EPS_DOMAIN {
            return Err(MapError::OutsideDisc { u, v });
        }
        Ok(Self { u, v })
    }

    /// Builds a point produced by a mapping formula whose output is in the
    /// disc by construction. No check is performed.
    pub(crate) const fn raw(u: f64, v: f64) -> Self {
        Self { u, v }
    }

    pub fn norm(&self) -> f64 {
        self.u.hypot(self.v)
    }

    pub fn angle(&self) -> f64 {
        self.v.atan2(self.u)
    }
}

impl SquarePoint {
    /// Checked constructor; rejects non-finite input and points with
    /// `max(|x|, |y|) > 1 + EPS_DOMAIN`.
    pub fn new(x: f64, y: f64) -> Result<Self, MapError> {
        if !x.is_finite() || !y.is_finite() {
            return Err(MapError::NonFinite);
        }
        if x.abs().max(y.abs()) > 1.0 + EPS_DOMAIN {
            return Err(MapError::OutsideSquare { x, y });
        }
        Ok(Self { x, y })
    }

    pub(crate) const fn raw(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Sup-norm distance from the origin; 1 on the perimeter.
    pub fn sup_norm(&self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn angle(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl fmt::Display for DiscPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u={}, v={})", self.u, self.v)
    }
}

impl fmt::Display for SquarePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x={}, y={})", self.x, self.y)
    }
}

/// Either end of a mapping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Disc(DiscPoint),
    Square(SquarePoint),
}

impl Point {
    pub fn coords(&self) -> (f64, f64) {
        match *self {
            Point::Disc(p) => (p.u, p.v),
            Point::Square(p) => (p.x, p.y),
        }
    }
}

/// Three-case signum: `-1`, `0` or `1`.
#[inline]
pub fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `√max(r, 0)`, refusing radicands that are negative beyond roundoff.
#[inline]
pub fn safe_sqrt(r: f64) -> Result<f64, MapError> {
    if r >= 0.0 {
        Ok(r.sqrt())
    } else if r >= -EPS_CLAMP {
        Ok(0.0)
    } else {
        Err(MapError::NegativeRadicand { radicand: r })
    }
}

/// Identity fallback for points on either axis, where the closed forms
/// divide by zero. Returns `None` for generic points.
#[inline]
pub fn axis_passthrough(p: Point) -> Option<Point> {
    let (a, b) = p.coords();
    if a.abs() <= AXIS_EPS || b.abs() <= AXIS_EPS {
        Some(p)
    } else {
        None
    }
}

#[inline]
pub(crate) fn disc_on_axis(p: DiscPoint) -> Option<SquarePoint> {
    axis_passthrough(Point::Disc(p)).map(|_| SquarePoint::raw(p.u, p.v))
}

#[inline]
pub(crate) fn square_on_axis(p: SquarePoint) -> Option<DiscPoint> {
    axis_passthrough(Point::Square(p)).map(|_| DiscPoint::raw(p.x, p.y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn signum_cases() {
        assert_eq!(sgn(-3.5), -1.0);
        assert_eq!(sgn(0.0), 0.0);
        assert_eq!(sgn(-0.0), 0.0);
        assert_eq!(sgn(0.001), 1.0);
    }

    #[test]
    fn safe_sqrt_clamps_roundoff_only() {
        assert_eq!(safe_sqrt(4.0).unwrap(), 2.0);
        assert_eq!(safe_sqrt(-1e-15).unwrap(), 0.0);
        assert!(matches!(
            safe_sqrt(-0.5),
            Err(MapError::NegativeRadicand { .. })
        ));
    }

    #[test]
    fn axis_fallback() {
        let p = Point::Disc(DiscPoint::new(0.0, 0.4).unwrap());
        assert_eq!(axis_passthrough(p), Some(p));
        let o = Point::Square(SquarePoint::new(0.0, 0.0).unwrap());
        assert_eq!(axis_passthrough(o), Some(o));
        let g = Point::Disc(DiscPoint::new(0.3, 0.2).unwrap());
        assert_eq!(axis_passthrough(g), None);
    }

    #[test]
    fn construction_limits() {
        assert!(DiscPoint::new(1.0, 0.0).is_ok());
        assert!(DiscPoint::new(1.0 + 1e-13, 0.0).is_ok());
        assert!(DiscPoint::new(0.8, 0.8).is_err());
        assert!(DiscPoint::new(f64::NAN, 0.0).is_err());
        assert!(SquarePoint::new(1.0, -1.0).is_ok());
        assert!(SquarePoint::new(1.0 + 1e-6, 0.0).is_err());
        assert!(SquarePoint::new(0.0, f64::INFINITY).is_err());
    }

    proptest! {
        #[test]
        fn sgn_product_rule(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            prop_assert_eq!(sgn(a * b), sgn(a) * sgn(b));
        }

        #[test]
        fn sgn_over_value_is_reciprocal_abs(v in prop_oneof![-1e6f64..-1e-6, 1e-6f64..1e6]) {
            let lhs = sgn(v) / v;
            let rhs = 1.0 / v.abs();
            prop_assert!((lhs - rhs).abs() <= 1e-15 * rhs);
        }
    }

    #[test]
    fn polar_construction_succeeds() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let t: f64 = rng.gen_range(0.0..=1.0);
            assert!(DiscPoint::new(theta.cos() * t, theta.sin() * t).is_ok());
        }
    }
}
