//! Elliptic special functions at the self-complementary modulus `k = 1/√2`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::sync::OnceLock;

use super::Complex;
use crate::MapError;

/// Parameter `m = k² = ½`; the complementary parameter is also `½`.
pub const PARAMETER: f64 = 0.5;

const LANDEN_CAP: usize = 16;
const CARLSON_TOL: f64 = 1e-14;
const CARLSON_CAP: usize = 64;
const POLE_RADIUS: f64 = 1e-9;

/// Arithmetic-geometric mean of two positive numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= f64::EPSILON * an {
            return 0.5 * (an + bn);
        }
        a = an;
        b = bn;
    }
    a
}

/// `K(1/√2) = π / (2·AGM(1, 1/√2))`.
pub fn compute_k_e() -> f64 {
    PI / (2.0 * agm(1.0, FRAC_1_SQRT_2))
}

/// Complete integral constants, evaluated once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticConstants {
    /// Complete integral of the first kind at modulus `1/√2`. Equal to the
    /// complementary integral `K'` at this modulus.
    pub k_e: f64,
    /// Lemniscate constant `π / AGM(1, √2)`.
    pub l_e: f64,
}

impl EllipticConstants {
    pub fn get() -> &'static EllipticConstants {
        static CONSTANTS: OnceLock<EllipticConstants> = OnceLock::new();
        CONSTANTS.get_or_init(|| EllipticConstants {
            k_e: compute_k_e(),
            l_e: PI / agm(1.0, std::f64::consts::SQRT_2),
        })
    }
}

/// Cached `K_e`.
#[inline]
pub fn k_e() -> f64 {
    EllipticConstants::get().k_e
}

/// Real Jacobi `(sn, cn, dn)` for parameter `m ∈ [0, 1)` by descending Landen
/// transformation.
pub fn jacobi_real(x: f64, m: f64) -> (f64, f64, f64) {
    debug_assert!((0.0..1.0).contains(&m));
    if m == 0.0 {
        return (x.sin(), x.cos(), 1.0);
    }
    let mut a = [0.0; LANDEN_CAP + 1];
    let mut c = [0.0; LANDEN_CAP + 1];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = (1.0 - m).sqrt();
    let mut n = 0;
    while n < LANDEN_CAP {
        let an = 0.5 * (a[n] + b);
        let cn = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
        a[n] = an;
        c[n] = cn;
        if cn.abs() <= f64::EPSILON * an {
            break;
        }
    }
    let mut phi = (1u64 << n) as f64 * a[n] * x;
    for i in (1..=n).rev() {
        phi = 0.5 * (phi + (c[i] / a[i] * phi.sin()).asin());
    }
    let (s, co) = phi.sin_cos();
    // The Landen quotient for dn is 0/0 at odd multiples of K; the direct
    // form is well conditioned since dn ≥ √(1 − m).
    (s, co, (1.0 - m * s * s).sqrt())
}

/// Real `(sn, cn, dn)` at `k = 1/√2`.
#[inline]
pub fn jacobi_sn_cn_dn(x: f64) -> (f64, f64, f64) {
    jacobi_real(x, PARAMETER)
}

/// `cn(z, 1/√2)` for complex `z`, without the pole check.
pub(crate) fn cn_complex_unchecked(z: Complex) -> Complex {
    let (s, c, d) = jacobi_real(z.re, PARAMETER);
    let (s1, c1, d1) = jacobi_real(z.im, 1.0 - PARAMETER);
    let den = c1 * c1 + PARAMETER * s * s * s1 * s1;
    Complex::new(c * c1 / den, -s * d * s1 * d1 / den)
}

/// Distance from `z` to the nearest pole of `cn`, which sit at
/// `2aK + (2b + 1)iK'` for integers `a`, `b`.
fn pole_distance(z: Complex) -> f64 {
    let k = k_e();
    let re = z.re - 2.0 * k * (z.re / (2.0 * k)).round();
    let shifted = z.im - k;
    let im = shifted - 2.0 * k * (shifted / (2.0 * k)).round();
    re.hypot(im)
}

/// `cn(z, 1/√2)` through the addition theorem in the real and imaginary
/// parts, each evaluated with real Jacobi functions.
pub fn jacobi_cn_complex(z: Complex) -> Result<Complex, MapError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(MapError::NonFinite);
    }
    if pole_distance(z) < POLE_RADIUS {
        return Err(MapError::Singularity { re: z.re, im: z.im });
    }
    Ok(cn_complex_unchecked(z))
}

/// Carlson's symmetric integral `R_F(x, y, z)` for complex arguments by the
/// duplication algorithm.
pub fn carlson_rf(x: Complex, y: Complex, z: Complex) -> Result<Complex, MapError> {
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let q = (3.0 * CARLSON_TOL).powf(-1.0 / 6.0)
        * (a0 - x).norm().max((a0 - y).norm()).max((a0 - z).norm());
    let (x0, y0) = (x, y);
    let mut a = a0;
    let mut scale = 1.0;
    let mut converged = false;
    for _ in 0..CARLSON_CAP {
        if q * scale < a.norm() {
            converged = true;
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        x = (x + lambda) * 0.25;
        y = (y + lambda) * 0.25;
        z = (z + lambda) * 0.25;
        a = (a + lambda) * 0.25;
        scale *= 0.25;
    }
    if !converged || !a.re.is_finite() || !a.im.is_finite() || a.norm() == 0.0 {
        return Err(MapError::BranchCut);
    }
    let dx = (a0 - x0) * scale / a;
    let dy = (a0 - y0) * scale / a;
    let dz = -(dx + dy);
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - e2 * e3 * (3.0 / 44.0);
    Ok(series / a.sqrt())
}

/// Incomplete integral `F(φ, 1/√2)` for complex amplitude.
///
/// The amplitude is first reduced by whole multiples of `π` using
/// `F(φ + nπ) = F(φ) + 2nK`, so the Carlson form only sees `|Re φ| ≤ π/2`.
pub fn elliptic_f_complex(phi: Complex) -> Result<Complex, MapError> {
    if !phi.re.is_finite() || !phi.im.is_finite() {
        return Err(MapError::NonFinite);
    }
    let turns = (phi.re / PI).round();
    let phi0 = Complex::new(phi.re - turns * PI, phi.im);
    let (s, c) = (phi0.sin(), phi0.cos());
    let rf = carlson_rf(c * c, 1.0 - PARAMETER * s * s, Complex::new(1.0, 0.0))?;
    Ok(s * rf + 2.0 * turns * k_e())
}
