//! Synthetic images and line measurements shared by the raster suites.
#![allow(dead_code)]

use squaremap::{pixel_to_canonical, RasterImage, Rgba};

pub const OPAQUE: u8 = 255;

/// Disc image of concentric rings; the red channel stores `16·ring` where
/// `ring = ⌊16r⌋`. Outside the disc is transparent.
pub fn concentric_rings(n: u32) -> RasterImage {
    RasterImage::from_fn(n, n, |i, j| {
        let (x, y) = pixel_to_canonical(i, j, n);
        let r = x.hypot(y);
        if r > 1.0 {
            Rgba::TRANSPARENT
        } else {
            let ring = (r * 16.0).floor().min(15.0) as u8;
            Rgba([ring * 16, 0, 0, OPAQUE])
        }
    })
    .unwrap()
}

/// `cells × cells` chessboard over the square; red stores `32·column`,
/// green stores `32·row`, blue alternates.
pub fn chessboard(n: u32, cells: u32) -> RasterImage {
    RasterImage::from_fn(n, n, |i, j| {
        let (c, r) = (i * cells / n, j * cells / n);
        Rgba([(c * 32) as u8, (r * 32) as u8, if (c + r) % 2 == 0 { 0 } else { 255 }, OPAQUE])
    })
    .unwrap()
}

/// Mixed-frequency disc image used for determinism checks.
pub fn textured_disc(n: u32) -> RasterImage {
    RasterImage::from_fn(n, n, |i, j| {
        let (x, y) = pixel_to_canonical(i, j, n);
        if x * x + y * y > 1.0 {
            return Rgba::TRANSPARENT;
        }
        let h = (i.wrapping_mul(2_654_435_761) ^ j.wrapping_mul(40_503)) as u8;
        let s = ((x * 9.0).sin() * (y * 7.0).cos() * 127.0 + 128.0) as u8;
        Rgba([s, h, ((x + y + 2.0) * 60.0) as u8, 200 + (h % 56)])
    })
    .unwrap()
}

/// Smooth opaque gradient over the whole square.
pub fn gradient(n: u32) -> RasterImage {
    RasterImage::from_fn(n, n, |i, j| {
        let (x, y) = pixel_to_canonical(i, j, n);
        Rgba([
            ((x + 1.0) * 127.0) as u8,
            ((y + 1.0) * 127.0) as u8,
            ((x * y + 1.0) * 100.0) as u8,
            OPAQUE,
        ])
    })
    .unwrap()
}

/// Straight `cells × cells` grid over `[-1, 1]²` seen through the barrel
/// distortion `r' = r(1 − 0.2r²)`. Red stores `32·column` of the undistorted
/// cell; pixels that no grid point reaches are transparent.
pub fn barrel_distorted_grid(n: u32, cells: u32) -> RasterImage {
    RasterImage::from_fn(n, n, |i, j| {
        let (x, y) = pixel_to_canonical(i, j, n);
        let rd = x.hypot(y);
        let Some(r) = undistort_radius(rd) else {
            return Rgba::TRANSPARENT;
        };
        let k = if rd == 0.0 { 1.0 } else { r / rd };
        let (ux, uy) = (x * k, y * k);
        if ux.abs() > 1.0 || uy.abs() > 1.0 {
            return Rgba::TRANSPARENT;
        }
        let col = (((ux + 1.0) * 0.5 * cells as f64).floor() as i64).clamp(0, cells as i64 - 1);
        let row = (((1.0 - uy) * 0.5 * cells as f64).floor() as i64).clamp(0, cells as i64 - 1);
        Rgba([(col * 32) as u8, (row * 32) as u8, 0, OPAQUE])
    })
    .unwrap()
}

/// Inverts `r(1 − 0.2r²) = rd` on the increasing branch `r ≤ √(5/3)` by
/// bisection; `None` beyond the branch maximum.
fn undistort_radius(rd: f64) -> Option<f64> {
    let distort = |r: f64| r * (1.0 - 0.2 * r * r);
    let (mut lo, mut hi) = (0.0f64, (5.0f64 / 3.0).sqrt());
    if rd > distort(hi) {
        return None;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if distort(mid) < rd {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Midpoints (canonical) of horizontally adjacent opaque pixel pairs whose
/// quantized channel changes from `k − 1` to `k`, returned with `k`.
pub fn vertical_edges(img: &RasterImage, channel: usize, step: f64) -> Vec<(usize, f64, f64)> {
    let n = img.width();
    let mut out = Vec::new();
    for j in 0..img.height() {
        for i in 0..n - 1 {
            let (a, b) = (img.get(i, j), img.get(i + 1, j));
            if a.0[3] != OPAQUE || b.0[3] != OPAQUE {
                continue;
            }
            let ka = (a.0[channel] as f64 / step).round() as i64;
            let kb = (b.0[channel] as f64 / step).round() as i64;
            if ka != kb && (ka - kb).abs() == 1 {
                let (x, y) = pixel_to_canonical(i, j, n);
                out.push((ka.max(kb) as usize, x + 1.0 / n as f64, y));
            }
        }
    }
    out
}

/// Both horizontal and vertical neighbour changes of a quantized channel.
pub fn all_edges(img: &RasterImage, channel: usize, step: f64) -> Vec<(usize, f64, f64)> {
    let n = img.width();
    let q = |c: Rgba| (c.0[channel] as f64 / step).round() as i64;
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let a = img.get(i, j);
            if a.0[3] != OPAQUE {
                continue;
            }
            let (x, y) = pixel_to_canonical(i, j, n);
            let half = 1.0 / n as f64;
            for (ni, nj, dx, dy) in [(i + 1, j, half, 0.0), (i, j + 1, 0.0, -half)] {
                if ni >= n || nj >= n {
                    continue;
                }
                let b = img.get(ni, nj);
                if b.0[3] != OPAQUE {
                    continue;
                }
                let (ka, kb) = (q(a), q(b));
                if (ka - kb).abs() == 1 {
                    out.push((ka.max(kb) as usize, x + dx, y + dy));
                }
            }
        }
    }
    out
}

/// Largest deviation (pixels) of each line's edge points from its
/// least-squares fit `x = a + b·y`, maximised over lines with enough points.
pub fn max_bowing(edges: &[(usize, f64, f64)], n: u32, min_points: usize) -> f64 {
    let lines: std::collections::BTreeSet<usize> = edges.iter().map(|e| e.0).collect();
    let mut worst = 0.0f64;
    for k in lines {
        let pts: Vec<(f64, f64)> = edges.iter().filter(|e| e.0 == k).map(|e| (e.1, e.2)).collect();
        if pts.len() < min_points {
            continue;
        }
        let m = pts.len() as f64;
        let (sy, sx) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.1, a.1 + p.0));
        let (my, mx) = (sy / m, sx / m);
        let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
        let sxy: f64 = pts.iter().map(|p| (p.1 - my) * (p.0 - mx)).sum();
        let b = if syy > 0.0 { sxy / syy } else { 0.0 };
        let dev = pts
            .iter()
            .map(|p| (p.0 - (mx + b * (p.1 - my))).abs())
            .fold(0.0, f64::max);
        worst = worst.max(dev * n as f64 / 2.0);
    }
    worst
}
