//! The elliptical grid mapping and its squelched family.
//!
//! Under the square-to-disc direction every vertical segment `x = x₀` of the
//! square lands on the ellipse `u²/x₀² + v²/b² = 1` and every horizontal
//! segment `y = y₀` on `u²/a² + v²/y₀² = 1`, with semi-axes
//! `a² = q + 1 − q·y²` and `b² = q + 1 − q·x²`. The plain elliptical grid map
//! is the member `q = 1`.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canonical::{disc_on_axis, safe_sqrt, sgn, square_on_axis, DiscPoint, SquarePoint};
use crate::MapError;

/// Smallest accepted squelching parameter.
pub const MIN_SQUELCH: f64 = 1e-6;

/// Squelching parameter `q ∈ [1e-6, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SquelchParam(f64);

impl SquelchParam {
    pub fn new(q: f64) -> Result<Self, MapError> {
        if q.is_finite() && (MIN_SQUELCH..=1.0).contains(&q) {
            Ok(Self(q))
        } else {
            Err(MapError::InvalidSquelch(q))
        }
    }

    pub fn q(self) -> f64 {
        self.0
    }

    /// Horizontal semi-axis `a = √(q + 1 − q·y²)` of the ellipse through `y`.
    pub fn semi_axis_a(self, y: f64) -> f64 {
        (self.0 + 1.0 - self.0 * y * y).sqrt()
    }

    /// Vertical semi-axis `b = √(q + 1 − q·x²)` of the ellipse through `x`.
    pub fn semi_axis_b(self, x: f64) -> f64 {
        (self.0 + 1.0 - self.0 * x * x).sqrt()
    }
}

impl TryFrom<f64> for SquelchParam {
    type Error = MapError;

    fn try_from(q: f64) -> Result<Self, Self::Error> {
        Self::new(q)
    }
}

impl From<SquelchParam> for f64 {
    fn from(q: SquelchParam) -> f64 {
        q.0
    }
}

impl fmt::Display for SquelchParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn eg_square_to_disc(p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    DiscPoint::raw(
        x * (1.0 - 0.5 * y * y).sqrt(),
        y * (1.0 - 0.5 * x * x).sqrt(),
    )
}

/// Inverse of [`eg_square_to_disc`] derived through the half-angle
/// identities.
pub fn eg_disc_to_square_trig(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let DiscPoint { u, v } = p;
    let two_sqrt2 = 2.0 * SQRT_2;
    let du = 2.0 + u * u - v * v;
    let dv = 2.0 - u * u + v * v;
    let x = 0.5 * safe_sqrt(du + two_sqrt2 * u)? - 0.5 * safe_sqrt(du - two_sqrt2 * u)?;
    let y = 0.5 * safe_sqrt(dv + two_sqrt2 * v)? - 0.5 * safe_sqrt(dv - two_sqrt2 * v)?;
    Ok(SquarePoint::raw(x, y))
}

/// Inverse of [`eg_square_to_disc`] from the biquadratic in `x²`. Kept
/// alongside the trigonometric form as an independent route.
pub fn eg_disc_to_square_biquadratic(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let DiscPoint { u, v } = p;
    let bu = 2.0 + u * u - v * v;
    let bv = 2.0 - u * u + v * v;
    let x = sgn(u) * FRAC_1_SQRT_2 * safe_sqrt(bu - safe_sqrt(bu * bu - 8.0 * u * u)?)?;
    let y = sgn(v) * FRAC_1_SQRT_2 * safe_sqrt(bv - safe_sqrt(bv * bv - 8.0 * v * v)?)?;
    Ok(SquarePoint::raw(x, y))
}

/// Squelched elliptical grid, square to disc.
///
/// With `α = 1 − x²` and `β = 1 − y²` the published quotient
/// `(y²a² − a²b²)/(x²y² − a²b²)` factors into
/// `(1 + qβ)(β + qα) / ((q + 1)(β + α(q + (1 − q)y²)))`, which stays accurate
/// next to the corners where numerator and denominator both vanish. The
/// corners themselves take their limit along the diagonal.
pub fn seg_square_to_disc(qp: SquelchParam, p: SquarePoint) -> DiscPoint {
    if let Some(d) = square_on_axis(p) {
        return d;
    }
    let SquarePoint { x, y } = p;
    let q = qp.q();
    let alpha = ((1.0 - x) * (1.0 + x)).max(0.0);
    let beta = ((1.0 - y) * (1.0 + y)).max(0.0);
    if alpha == 0.0 && beta == 0.0 {
        return DiscPoint::raw(sgn(x) * FRAC_1_SQRT_2, sgn(y) * FRAC_1_SQRT_2);
    }
    let u2 = (1.0 + q * beta) * (beta + q * alpha)
        / ((q + 1.0) * (beta + alpha * (q + (1.0 - q) * y * y)));
    let v2 = (1.0 + q * alpha) * (alpha + q * beta)
        / ((q + 1.0) * (alpha + beta * (q + (1.0 - q) * x * x)));
    DiscPoint::raw(x * u2.sqrt(), y * v2.sqrt())
}

/// Squelched elliptical grid, disc to square. The biquadratic root
/// `sgn(u)/√(2q)·√(A − √(A² − 4q(q+1)u²))` is evaluated as
/// `u·√(2(q+1)/(A + √(A² − 4q(q+1)u²)))`, removing both the cancellation and
/// the `1/√(2q)` amplification at small `q`.
pub fn seg_disc_to_square(qp: SquelchParam, p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(s) = disc_on_axis(p) {
        return Ok(s);
    }
    let DiscPoint { u, v } = p;
    let q = qp.q();
    let k = 4.0 * q * (q + 1.0);
    let a = q + 1.0 + q * u * u - v * v;
    let b = q + 1.0 - u * u + q * v * v;
    let x = u * (2.0 * (q + 1.0) / (a + safe_sqrt(a * a - k * u * u)?)).sqrt();
    let y = v * (2.0 * (q + 1.0) / (b + safe_sqrt(b * b - k * v * v)?)).sqrt();
    Ok(SquarePoint::raw(x, y))
}
