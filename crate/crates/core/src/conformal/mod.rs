//! Conformal Schwarz-Christoffel mapping between the disc and the square,
//! together with the elliptic machinery it needs.
//!
//! With `z = x + iy` and `w = u + iv`:
//!
//! ```text
//! w = (1 − i)/√2 · cn(K_e·(1 + i)/2·z − K_e, 1/√2)
//! z = (1 − i)/(−K_e) · F(arccos((1 + i)/√2·w), 1/√2) + 1 − i
//! ```

mod complex;
mod elliptic;

pub use complex::complex_arccos;
pub use elliptic::{
    agm, carlson_rf, compute_k_e, elliptic_f_complex, jacobi_cn_complex, jacobi_real,
    jacobi_sn_cn_dn, k_e, EllipticConstants, PARAMETER,
};

use std::f64::consts::FRAC_1_SQRT_2;

use elliptic::cn_complex_unchecked;

use crate::canonical::{DiscPoint, SquarePoint};
use crate::MapError;

/// Complex numbers used throughout the conformal map.
pub type Complex = num_complex::Complex64;

/// Radius beyond which disc inputs are pulled back before inversion.
pub const RIM_PULLBACK: f64 = 1.0 - 1e-9;

const CONSISTENCY_TOL: f64 = 1e-8;

/// `(1 − i)/√2 = √(−i)`.
const ROT_MINUS: Complex = Complex::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2);
/// `(1 + i)/√2 = √i`.
const ROT_PLUS: Complex = Complex::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2);

/// The map commutes with both axis reflections, so coordinates that are
/// exactly zero on input stay exactly zero.
fn snap_axes(a: f64, b: f64, (c, d): (f64, f64)) -> (f64, f64) {
    (if a == 0.0 { 0.0 } else { c }, if b == 0.0 { 0.0 } else { d })
}

/// Conformal square-to-disc map.
pub fn sc_square_to_disc(p: SquarePoint) -> DiscPoint {
    let k = k_e();
    let z = Complex::new(p.x, p.y);
    let arg = z * Complex::new(0.5 * k, 0.5 * k) - k;
    let w = ROT_MINUS * cn_complex_unchecked(arg);
    let (u, v) = snap_axes(p.x, p.y, (w.re, w.im));
    DiscPoint::raw(u, v)
}

/// The same map written with `+K_e`, using that `cn` is even.
pub fn sc_square_to_disc_plus(p: SquarePoint) -> DiscPoint {
    let k = k_e();
    let z = Complex::new(p.x, p.y);
    let arg = -(z * Complex::new(0.5 * k, 0.5 * k)) + k;
    let w = ROT_MINUS * cn_complex_unchecked(arg);
    let (u, v) = snap_axes(p.x, p.y, (w.re, w.im));
    DiscPoint::raw(u, v)
}

/// Compact complex form `w = √(−i)·cn(K_e·z·√(i/2) − K_e)` with the roots
/// taken numerically.
pub fn sc_square_to_disc_compact(p: SquarePoint) -> DiscPoint {
    let k = k_e();
    let i = Complex::i();
    let z = Complex::new(p.x, p.y);
    let arg = z * (i / 2.0).sqrt() * k - k;
    let w = (-i).sqrt() * cn_complex_unchecked(arg);
    let (u, v) = snap_axes(p.x, p.y, (w.re, w.im));
    DiscPoint::raw(u, v)
}

fn consistent(f: Complex, w: Complex) -> bool {
    jacobi_cn_complex(f).is_ok_and(|c| (c - w).norm() <= CONSISTENCY_TOL)
}

/// `cn⁻¹(w) = F(arccos w)`, falling back to the conjugated amplitude when the
/// principal evaluation does not reproduce `w`.
fn inverse_cn(w: Complex) -> Result<Complex, MapError> {
    let phi = complex_arccos(w);
    if let Ok(f) = elliptic_f_complex(phi) {
        if consistent(f, w) {
            return Ok(f);
        }
    }
    let f = elliptic_f_complex(phi.conj())?.conj();
    if consistent(f, w) {
        Ok(f)
    } else {
        Err(MapError::Singularity { re: w.re, im: w.im })
    }
}

/// Conformal disc-to-square map.
///
/// Inputs within `1e-9` of the rim are pulled back radially to
/// [`RIM_PULLBACK`] and the image is pushed out to the perimeter, since the
/// four corner pre-images are singular points of the derivative.
pub fn sc_disc_to_square(p: DiscPoint) -> Result<SquarePoint, MapError> {
    if !p.u.is_finite() || !p.v.is_finite() {
        return Err(MapError::NonFinite);
    }
    let r = p.norm();
    let on_rim = r > RIM_PULLBACK;
    let w = if on_rim {
        Complex::new(p.u, p.v) * (RIM_PULLBACK / r)
    } else {
        Complex::new(p.u, p.v)
    };
    let f = inverse_cn(ROT_PLUS * w)?;
    let mut z = ROT_MINUS * f * (-std::f64::consts::SQRT_2 / k_e()) + Complex::new(1.0, -1.0);
    if on_rim {
        z /= z.re.abs().max(z.im.abs());
    }
    let (x, y) = snap_axes(p.u, p.v, (z.re, z.im));
    Ok(SquarePoint::raw(x.clamp(-1.0, 1.0), y.clamp(-1.0, 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn sq(x: f64, y: f64) -> SquarePoint {
        SquarePoint::new(x, y).unwrap()
    }

    #[test]
    fn forward_examples() {
        let d = sc_square_to_disc(sq(0.0, 0.0));
        assert!(d.norm() < 1e-15);
        let d = sc_square_to_disc(sq(1.0, 1.0));
        assert!((d.u - FRAC_1_SQRT_2).abs() < 1e-9 && (d.v - FRAC_1_SQRT_2).abs() < 1e-9);
        let d = sc_square_to_disc(sq(-1.0, 1.0));
        assert!((d.u * d.u + d.v * d.v - 1.0).abs() < 1e-9);
        assert!((d.u + FRAC_1_SQRT_2).abs() < 1e-9 && (d.v - FRAC_1_SQRT_2).abs() < 1e-9);
        // Axes stay on axes, but the map is not the identity there.
        let d = sc_square_to_disc(sq(0.5, 0.0));
        assert!(d.v == 0.0 && d.u > 0.0 && (d.u - 0.5).abs() > 1e-3);
    }

    #[test]
    fn inverse_examples() {
        let s = sc_disc_to_square(DiscPoint::new(0.0, 0.0).unwrap()).unwrap();
        assert!(s.x.abs() < 1e-14 && s.y.abs() < 1e-14, "{s}");
        let p = DiscPoint::new(0.3, 0.4).unwrap();
        let d = sc_square_to_disc(sc_disc_to_square(p).unwrap());
        assert!((d.u - 0.3).abs() < 1e-8 && (d.v - 0.4).abs() < 1e-8);
        let s = sc_disc_to_square(DiscPoint::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2).unwrap()).unwrap();
        assert!((s.x - 1.0).abs() < 1e-3 && (s.y - 1.0).abs() < 1e-3, "{s}");
    }

    #[test]
    fn round_trip_interior_grid() {
        let n = 101;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let x = -0.95 + 1.9 * i as f64 / (n - 1) as f64;
                let y = -0.95 + 1.9 * j as f64 / (n - 1) as f64;
                let s = sc_disc_to_square(sc_square_to_disc(sq(x, y))).unwrap();
                worst = worst.max((s.x - x).abs().max((s.y - y).abs()));
            }
        }
        assert!(worst < 1e-8, "{worst}");
    }

    #[test]
    fn alternative_forms_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let p = sq(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            let a = sc_square_to_disc(p);
            for b in [sc_square_to_disc_plus(p), sc_square_to_disc_compact(p)] {
                assert!((a.u - b.u).abs() < 1e-12 && (a.v - b.v).abs() < 1e-12, "{p}");
            }
        }
    }

    #[test]
    fn dihedral_symmetry() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let close = |a: DiscPoint, b: (f64, f64)| (a.u - b.0).abs() < 1e-10 && (a.v - b.1).abs() < 1e-10;
        for _ in 0..500 {
            let (x, y): (f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            let d = sc_square_to_disc(sq(x, y));
            assert!(close(sc_square_to_disc(sq(x, -y)), (d.u, -d.v)));
            assert!(close(sc_square_to_disc(sq(-x, y)), (-d.u, d.v)));
            assert!(close(sc_square_to_disc(sq(y, x)), (d.v, d.u)));
            assert!(close(sc_square_to_disc(sq(-y, -x)), (-d.v, -d.u)));

            let r: f64 = rng.gen_range(0.0..0.99);
            let t: f64 = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
            let (u, v) = (r * t.cos(), r * t.sin());
            let s = sc_disc_to_square(DiscPoint::new(u, v).unwrap()).unwrap();
            let m = sc_disc_to_square(DiscPoint::new(v, u).unwrap()).unwrap();
            assert!((m.x - s.y).abs() < 1e-10 && (m.y - s.x).abs() < 1e-10);
            let m = sc_disc_to_square(DiscPoint::new(u, -v).unwrap()).unwrap();
            assert!((m.x - s.x).abs() < 1e-10 && (m.y + s.y).abs() < 1e-10);
        }
    }

    #[test]
    fn boundary_to_boundary() {
        for i in 0..720 {
            let t = i as f64 * std::f64::consts::TAU / 720.0;
            let s = sc_disc_to_square(DiscPoint::raw(t.cos(), t.sin())).unwrap();
            assert!((s.sup_norm() - 1.0).abs() < 1e-9, "θ={t}: {s}");
            let (x, y) = if t.cos().abs() >= t.sin().abs() {
                (t.cos().signum(), t.tan() * t.cos().signum())
            } else {
                (1.0 / t.tan() * t.sin().signum(), t.sin().signum())
            };
            let d = sc_square_to_disc(SquarePoint::raw(x, y));
            assert!((d.norm() - 1.0).abs() < 1e-9, "θ={t}: {d}");
        }
    }
}
