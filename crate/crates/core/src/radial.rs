//! Radially constrained mappings.
//!
//! A radial mapping only moves points along rays from the origin, so every
//! one of them has the form `(u, v) = t(x, y) · (x, y) / √(x² + y²)` for some
//! scalar radius function `t`. Simple stretching takes `t` from the square's
//! walls; the squircular family takes it from a continuum of FG-squircles
//! `x² + y² − t^(2n−2)·x²y² = t²`, one per exponent `n` of `s = tⁿ`.
//!
//! Several of the published closed forms subtract two nearly equal square
//! roots near the axes. Where that loses accuracy the functions below use the
//! rationalized form `a − √(a² − b) = b / (a + √(a² − b))`, which is the same
//! expression without the cancellation.

use serde::{Deserialize, Serialize};

use crate::canonical::{disc_on_axis, safe_sqrt, sgn, square_on_axis, DiscPoint, SquarePoint};
use crate::MapError;

const MAX_ROOT_ITERATIONS: usize = 200;

// ---------------------------------------------------------------------------
// Simple stretching

/// Stretches each ray of the disc linearly onto the square's wall.
pub fn stretch_disc_to_square(p: DiscPoint) -> SquarePoint {
    if let Some(q) = disc_on_axis(p) {
        return q;
    }
    let DiscPoint { u, v } = p;
    let r = u.hypot(v);
    if u * u >= v * v {
        SquarePoint::raw(sgn(u) * r, sgn(u) * (v / u) * r)
    } else {
        SquarePoint::raw(sgn(v) * (u / v) * r, sgn(v) * r)
    }
}

pub fn stretch_square_to_disc(p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    let rho = x.hypot(y);
    if x * x >= y * y {
        DiscPoint::raw(sgn(x) * x * x / rho, sgn(x) * x * y / rho)
    } else {
        DiscPoint::raw(sgn(y) * x * y / rho, sgn(y) * y * y / rho)
    }
}

// ---------------------------------------------------------------------------
// FG-squircular

/// Maps each shrunken FG-squircle `x² + y² − x²y² = t²` onto the circle of
/// radius `t`, along rays.
pub fn fgs_square_to_disc(p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    let r2 = x * x + y * y;
    let t = (r2 - x * x * y * y).max(0.0).sqrt();
    let scale = t / r2.sqrt();
    DiscPoint::raw(x * scale, y * scale)
}

/// Inverse of [`fgs_square_to_disc`]. The `1/|v|`, `1/|u|` form
/// `√(s − √s·√(s − 4u²v²))/(√2·|v|)` is rationalized to
/// `u·√(2s/(s + √s·√(s − 4u²v²)))`, which avoids the cancellation when
/// `u²v² ≪ s` near the axes.
pub fn fgs_disc_to_square(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let DiscPoint { u, v } = p;
    let s = u * u + v * v;
    let inner = s.sqrt() * safe_sqrt(s - 4.0 * u * u * v * v)?;
    let k = (2.0 * s / (s + inner)).sqrt();
    Ok(SquarePoint::raw(u * k, v * k))
}

// ---------------------------------------------------------------------------
// 2-squircular (s = t²)

pub fn two_sq_square_to_disc(p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    let d = (1.0 + x * x * y * y).sqrt();
    DiscPoint::raw(x / d, y / d)
}

pub fn two_sq_disc_to_square(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let DiscPoint { u, v } = p;
    // sgn(uv)/(v√2)·√(1 − √(1 − 4u²v²)), rationalized.
    let root = safe_sqrt(1.0 - 4.0 * u * u * v * v)?;
    let scale = (2.0 / (1.0 + root)).sqrt();
    Ok(SquarePoint::raw(u * scale, v * scale))
}

// ---------------------------------------------------------------------------
// 3-squircular (s = t³)

pub fn three_sq_square_to_disc(p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    let r2 = x * x + y * y;
    // sgn(xy)/y·√((−1 + √(1 + 4x²y²r²)) / 2r²), rationalized.
    let root = (1.0 + 4.0 * x * x * y * y * r2).sqrt();
    let scale = (2.0 / (1.0 + root)).sqrt();
    DiscPoint::raw(x * scale, y * scale)
}

pub fn three_sq_disc_to_square(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let DiscPoint { u, v } = p;
    let s = u * u + v * v;
    let root = safe_sqrt(1.0 - 4.0 * u * u * v * v * s)?;
    let scale = (2.0 / (1.0 + root)).sqrt();
    Ok(SquarePoint::raw(u * scale, v * scale))
}

// ---------------------------------------------------------------------------
// Squircular profiles

/// The exponent `n` of `s = tⁿ` selecting one squircular continuum
/// `x² + y² − t^(2n−2)·x²y² = t²` of the square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RadialProfile {
    /// `s = t`, the FG-squircular continuum.
    One,
    /// `s = t²`.
    Two,
    /// `s = t³`.
    Three,
    /// `s = t^(3/2)`: quadratic in `t`.
    ThreeHalves,
    /// `s = t^(1/2)`: depressed cubic in `t`.
    Half,
    /// `s = t⁴`: depressed cubic in `τ = t²`.
    Four,
}

impl RadialProfile {
    pub const ALL: [RadialProfile; 6] = [
        RadialProfile::One,
        RadialProfile::Two,
        RadialProfile::Three,
        RadialProfile::ThreeHalves,
        RadialProfile::Half,
        RadialProfile::Four,
    ];

    /// The profiles whose inverse is computed numerically.
    pub const NUMERIC: [RadialProfile; 3] = [
        RadialProfile::ThreeHalves,
        RadialProfile::Half,
        RadialProfile::Four,
    ];

    pub fn exponent(self) -> f64 {
        match self {
            RadialProfile::One => 1.0,
            RadialProfile::Two => 2.0,
            RadialProfile::Three => 3.0,
            RadialProfile::ThreeHalves => 1.5,
            RadialProfile::Half => 0.5,
            RadialProfile::Four => 4.0,
        }
    }

    /// Radius `t ∈ [0, 1]` of the disc circle that the contour through
    /// `(x, y)` maps to.
    pub fn forward_t(self, x: f64, y: f64) -> f64 {
        let r2 = x * x + y * y;
        let p = x * x * y * y;
        if r2 == 0.0 {
            return 0.0;
        }
        match self {
            RadialProfile::One => (r2 - p).max(0.0).sqrt(),
            RadialProfile::Two => (r2 / (1.0 + p)).sqrt(),
            RadialProfile::Three => {
                let tau = 2.0 * r2 / (1.0 + (1.0 + 4.0 * p * r2).sqrt());
                tau.sqrt()
            }
            // t² + p·t − r² = 0, positive root.
            RadialProfile::ThreeHalves => 2.0 * r2 / (p + (p * p + 4.0 * r2).sqrt()),
            RadialProfile::Half => half_profile_root(r2, p),
            RadialProfile::Four => four_profile_root(r2, p).sqrt(),
        }
    }

    /// `x² + y² − t^(2n−2)·x²y² − t²`; zero when `t` lies on this continuum.
    pub fn continuum_residual(self, x: f64, y: f64, t: f64) -> f64 {
        let weight = t.powf(2.0 * self.exponent() - 2.0);
        x * x + y * y - weight * x * x * y * y - t * t
    }
}

/// Largest root of `t³ − r²·t + p = 0`.
///
/// The cubic always has three real roots here, so the radical form of the
/// solution needs complex intermediates. The wanted root lies right of the
/// local minimum at `√(r²/3)`, where the cubic is increasing and convex.
fn half_profile_root(r2: f64, p: f64) -> f64 {
    if p == 0.0 {
        return r2.sqrt();
    }
    let f = |t: f64| (t * t * t - r2 * t + p, 3.0 * t * t - r2);
    let lo = (r2 / 3.0).sqrt();
    let hi = if f(1.0).0 >= 0.0 { 1.0 } else { r2.sqrt() };
    let seed = (r2 - p).max(0.0).sqrt();
    newton_bracketed(f, lo, hi, seed).unwrap_or(seed)
}

/// The single real root `τ` of `p·τ³ + τ − r² = 0`.
fn four_profile_root(r2: f64, p: f64) -> f64 {
    if p == 0.0 {
        return r2;
    }
    let f = |tau: f64| (p * tau * tau * tau + tau - r2, 3.0 * p * tau * tau + 1.0);
    let hi = if f(1.0).0 >= 0.0 { 1.0 } else { r2 };
    let seed = (r2 - p).max(0.0);
    newton_bracketed(f, 0.0, hi, seed).unwrap_or(seed)
}

/// Newton's method for an increasing function on `[lo, hi]` with
/// `f(lo) ≤ 0 ≤ f(hi)`, falling back to bisection whenever a step would
/// leave the bracket.
fn newton_bracketed(
    f: impl Fn(f64) -> (f64, f64),
    mut lo: f64,
    mut hi: f64,
    seed: f64,
) -> Result<f64, MapError> {
    let mut x = if seed > lo && seed < hi {
        seed
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..MAX_ROOT_ITERATIONS {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        let next = if dfx > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE)
            || hi - lo <= 4.0 * f64::EPSILON * hi.abs()
        {
            return Ok(next);
        }
        x = next;
    }
    Err(MapError::NoConvergence {
        iterations: MAX_ROOT_ITERATIONS,
    })
}

/// Square-to-disc map of a squircular profile.
pub fn profile_square_to_disc(profile: RadialProfile, p: SquarePoint) -> DiscPoint {
    if let Some(q) = square_on_axis(p) {
        return q;
    }
    let SquarePoint { x, y } = p;
    let t = profile.forward_t(x, y);
    let scale = t / x.hypot(y);
    DiscPoint::raw(x * scale, y * scale)
}

/// Disc-to-square map of a squircular profile, found by root finding on the
/// ray radius between the origin and the square's perimeter.
pub fn profile_disc_to_square(
    profile: RadialProfile,
    p: DiscPoint,
) -> Result<SquarePoint, MapError> {
    if let Some(q) = disc_on_axis(p) {
        return Ok(q);
    }
    let t = p.norm();
    let (c, s) = (p.u / t, p.v / t);
    let r_perimeter = 1.0 / c.abs().max(s.abs());
    let g = |r: f64| profile.forward_t(r * c, r * s) - t;
    let r = ray_root(g, 0.0, r_perimeter)?;
    Ok(SquarePoint::raw(r * c, r * s))
}

/// Root of an increasing function on `[lo, hi]` by Illinois false position,
/// with bisection whenever the interpolant stalls.
fn ray_root(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64, MapError> {
    let mut g_lo = g(lo);
    let mut g_hi = g(hi);
    if g_lo >= 0.0 {
        return Ok(lo);
    }
    if g_hi <= 0.0 {
        return Ok(hi);
    }
    let mut side = 0i8;
    for _ in 0..MAX_ROOT_ITERATIONS {
        let width = hi - lo;
        if width <= 2.0 * f64::EPSILON * hi {
            return Ok(0.5 * (lo + hi));
        }
        let mut x = (lo * g_hi - hi * g_lo) / (g_hi - g_lo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let gx = g(x);
        if gx == 0.0 {
            return Ok(x);
        }
        if gx < 0.0 {
            lo = x;
            g_lo = gx;
            if side == -1 {
                g_hi *= 0.5;
            }
            side = -1;
        } else {
            hi = x;
            g_hi = gx;
            if side == 1 {
                g_lo *= 0.5;
            }
            side = 1;
        }
        // A one-sided run means the far endpoint is stale; force a bisection.
        if hi - lo > 0.5 * width {
            let mid = 0.5 * (lo + hi);
            let gm = g(mid);
            if gm < 0.0 {
                lo = mid;
                g_lo = gm;
            } else {
                hi = mid;
                g_hi = gm;
            }
            side = 0;
        }
    }
    Err(MapError::NoConvergence {
        iterations: MAX_ROOT_ITERATIONS,
    })
}
