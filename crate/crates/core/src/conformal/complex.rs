//! Principal complex arccosine.

use super::Complex;

/// Principal `arccos w`, with real part in `[0, π]`.
///
/// Uses Kahan's formulation, which keeps full accuracy near `±1` and takes
/// its branch from the sign of zero in `Im w`. A negative zero is folded to
/// positive, so real arguments beyond `±1` land on the upper side of the cut.
pub fn complex_arccos(w: Complex) -> Complex {
    let im = w.im + 0.0;
    let s_minus = Complex::new(1.0 - w.re, 0.0 - im).sqrt();
    let s_plus = Complex::new(1.0 + w.re, im).sqrt();
    let re = 2.0 * s_minus.re.atan2(s_plus.re);
    let im = (s_plus.re * s_minus.im - s_plus.im * s_minus.re).asinh();
    Complex::new(re, im + 0.0)
}
