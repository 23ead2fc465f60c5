//! Inverse-mapped image resampling between disc and square images.
//!
//! Every output pixel is pulled from the source: its canonical position is
//! sent through the inverse of the requested direction and the source is
//! sampled bilinearly there. The source canonical square `[-1, 1]²` spans
//! the whole source image, so a disc source is its inscribed disc (an
//! inscribed ellipse for non-square images).

use std::path::Path;
use std::str::FromStr;

use image::{ImageFormat, ImageReader, RgbaImage};
use rayon::prelude::*;
use squaremap_core::{Direction, DiscPoint, MapError, MappingId, SquarePoint};

use crate::error::RasterError;

/// Largest pixel distance searched when a sample hits a mapping singularity.
pub const FALLBACK_RADIUS: i64 = 3;

/// An 8-bit RGBA colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rgba(pub [u8; 4]);

impl Rgba {
    pub const TRANSPARENT: Rgba = Rgba([0, 0, 0, 0]);
}

impl FromStr for Rgba {
    type Err = RasterError;

    /// Parses `RRGGBBAA` hexadecimal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RasterError::InvalidColor(s.to_owned());
        if s.len() != 8 || !s.is_ascii() {
            return Err(bad());
        }
        let mut out = [0u8; 4];
        for (k, byte) in out.iter_mut().enumerate() {
            *byte = u8::from_str_radix(&s[2 * k..2 * k + 2], 16).map_err(|_| bad())?;
        }
        Ok(Rgba(out))
    }
}

/// Row-major RGBA raster, 8 bits per channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl RasterImage {
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, RasterError> {
        if width == 0 || height == 0 {
            return Err(RasterError::EmptyImage);
        }
        let expected = width as usize * height as usize * 4;
        if pixels.len() != expected {
            return Err(RasterError::PixelLength {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// An image filled with one colour.
    pub fn filled(width: u32, height: u32, color: Rgba) -> Result<Self, RasterError> {
        let n = width as usize * height as usize;
        Self::new(width, height, color.0.repeat(n))
    }

    /// Builds an image by evaluating `f(column, row)` for every pixel.
    pub fn from_fn(
        width: u32,
        height: u32,
        f: impl Fn(u32, u32) -> Rgba,
    ) -> Result<Self, RasterError> {
        let mut pixels = Vec::with_capacity(width as usize * height as usize * 4);
        for j in 0..height {
            for i in 0..width {
                pixels.extend_from_slice(&f(i, j).0);
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, i: u32, j: u32) -> Rgba {
        let k = (j as usize * self.width as usize + i as usize) * 4;
        Rgba(self.pixels[k..k + 4].try_into().unwrap())
    }

    /// Loads a PNG, promoting grey and RGB inputs to RGBA.
    pub fn load_png(path: &Path) -> Result<Self, RasterError> {
        let img = ImageReader::open(path)
            .map_err(|source| RasterError::Io {
                path: path.to_path_buf(),
                source,
            })?
            .with_guessed_format()
            .map_err(|source| RasterError::Io {
                path: path.to_path_buf(),
                source,
            })?
            .decode()?
            .into_rgba8();
        let (w, h) = img.dimensions();
        Self::new(w, h, img.into_raw())
    }

    pub fn save_png(&self, path: &Path) -> Result<(), RasterError> {
        let img = RgbaImage::from_raw(self.width, self.height, self.pixels.clone())
            .expect("pixel length is an invariant");
        img.save_with_format(path, ImageFormat::Png)?;
        Ok(())
    }

    /// Premultiplied texel with clamp-to-edge addressing.
    fn texel(&self, i: i64, j: i64) -> [f64; 4] {
        let i = i.clamp(0, self.width as i64 - 1) as u32;
        let j = j.clamp(0, self.height as i64 - 1) as u32;
        premultiply(self.get(i, j))
    }

    /// Bilinear, premultiplied sample at the canonical point `(a, b)`.
    fn sample(&self, a: f64, b: f64) -> [f64; 4] {
        let px = (a + 1.0) * 0.5 * self.width as f64 - 0.5;
        let py = (1.0 - b) * 0.5 * self.height as f64 - 0.5;
        let (x0, y0) = (px.floor(), py.floor());
        let (fx, fy) = (px - x0, py - y0);
        let (i, j) = (x0 as i64, y0 as i64);
        let (t00, t10, t01, t11) = (
            self.texel(i, j),
            self.texel(i + 1, j),
            self.texel(i, j + 1),
            self.texel(i + 1, j + 1),
        );
        let mut out = [0.0; 4];
        for c in 0..4 {
            let top = t00[c] + fx * (t10[c] - t00[c]);
            let bottom = t01[c] + fx * (t11[c] - t01[c]);
            out[c] = top + fy * (bottom - top);
        }
        out
    }
}

fn premultiply(c: Rgba) -> [f64; 4] {
    let a = c.0[3] as f64 / 255.0;
    [
        c.0[0] as f64 * a,
        c.0[1] as f64 * a,
        c.0[2] as f64 * a,
        a,
    ]
}

fn unpremultiply(p: [f64; 4]) -> Rgba {
    let a = p[3];
    if a <= 0.0 {
        return Rgba::TRANSPARENT;
    }
    let ch = |v: f64| (v / a).round().clamp(0.0, 255.0) as u8;
    Rgba([ch(p[0]), ch(p[1]), ch(p[2]), (a * 255.0).round().clamp(0.0, 255.0) as u8])
}

/// One remapping request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RemapJob {
    pub mapping: MappingId,
    pub direction: Direction,
    pub out_size: u32,
    pub supersample: u32,
    pub background: Rgba,
}

impl RemapJob {
    pub fn new(
        mapping: MappingId,
        direction: Direction,
        out_size: u32,
        supersample: u32,
        background: Rgba,
    ) -> Result<Self, RasterError> {
        if ![1, 2, 4].contains(&supersample) {
            return Err(RasterError::InvalidSupersample(supersample));
        }
        if out_size == 0 {
            return Err(RasterError::EmptyImage);
        }
        Ok(Self {
            mapping,
            direction,
            out_size,
            supersample,
            background,
        })
    }
}

/// Canonical coordinates of the centre of pixel `(i, j)` in an `n × n`
/// image. Rows grow downward while canonical `y` grows upward.
pub fn pixel_to_canonical(i: u32, j: u32, n: u32) -> (f64, f64) {
    canonical(i as f64 + 0.5, j as f64 + 0.5, n)
}

fn canonical(px: f64, py: f64, n: u32) -> (f64, f64) {
    let n = n as f64;
    (2.0 * px / n - 1.0, 1.0 - 2.0 * py / n)
}

struct Remapper<'a> {
    src: &'a RasterImage,
    job: &'a RemapJob,
    background: [f64; 4],
    fallback: Vec<(i64, i64)>,
}

impl Remapper<'_> {
    /// Source canonical point for an output canonical point; `None` when the
    /// output point lies outside the output domain.
    fn source_point(&self, x: f64, y: f64) -> Option<Result<(f64, f64), MapError>> {
        let m = &self.job.mapping;
        match self.job.direction {
            Direction::DiscToSquare => {
                let p = SquarePoint::new(x.clamp(-1.0, 1.0), y.clamp(-1.0, 1.0)).ok()?;
                let d = m.square_to_disc(p);
                Some(Ok((d.u, d.v)))
            }
            Direction::SquareToDisc => {
                if x * x + y * y > 1.0 {
                    return None;
                }
                let d = DiscPoint::new(x, y).ok()?;
                Some(m.disc_to_square(d).map(|s| (s.x, s.y)))
            }
        }
    }

    /// Colour of the nearest pixel centre within [`FALLBACK_RADIUS`] whose
    /// source point is valid.
    fn nearest_valid(&self, i: u32, j: u32) -> [f64; 4] {
        let n = self.job.out_size;
        for &(di, dj) in &self.fallback {
            let (pi, pj) = (i as i64 + di, j as i64 + dj);
            if pi < 0 || pj < 0 || pi >= n as i64 || pj >= n as i64 {
                continue;
            }
            let (x, y) = pixel_to_canonical(pi as u32, pj as u32, n);
            if let Some(Ok((a, b))) = self.source_point(x, y) {
                return self.src.sample(a, b);
            }
        }
        self.background
    }

    fn shade(&self, i: u32, j: u32) -> Rgba {
        let n = self.job.out_size;
        if self.job.direction == Direction::SquareToDisc {
            let (cx, cy) = pixel_to_canonical(i, j, n);
            if cx.hypot(cy) >= 1.0 + 1.0 / n as f64 {
                return self.job.background;
            }
        }
        let s = self.job.supersample;
        let mut acc = [0.0; 4];
        for b in 0..s {
            for a in 0..s {
                let (x, y) = canonical(
                    i as f64 + (a as f64 + 0.5) / s as f64,
                    j as f64 + (b as f64 + 0.5) / s as f64,
                    n,
                );
                let c = match self.source_point(x, y) {
                    None => self.background,
                    Some(Ok((sa, sb))) => self.src.sample(sa, sb),
                    Some(Err(_)) => self.nearest_valid(i, j),
                };
                for k in 0..4 {
                    acc[k] += c[k];
                }
            }
        }
        let count = (s * s) as f64;
        unpremultiply(acc.map(|v| v / count))
    }
}

fn fallback_offsets() -> Vec<(i64, i64)> {
    let r = FALLBACK_RADIUS;
    let mut offsets: Vec<(i64, i64)> = (-r..=r)
        .flat_map(|dj| (-r..=r).map(move |di| (di, dj)))
        .filter(|&(di, dj)| (di, dj) != (0, 0) && di * di + dj * dj <= r * r)
        .collect();
    offsets.sort_by_key(|&(di, dj)| (di * di + dj * dj, dj, di));
    offsets
}

/// Remaps `src` on the global thread pool.
pub fn remap(src: &RasterImage, job: &RemapJob) -> RasterImage {
    let remapper = Remapper {
        src,
        job,
        background: premultiply(job.background),
        fallback: fallback_offsets(),
    };
    let n = job.out_size;
    let rows: Vec<Vec<u8>> = (0..n)
        .into_par_iter()
        .map(|j| (0..n).flat_map(|i| remapper.shade(i, j).0).collect())
        .collect();
    RasterImage::new(n, n, rows.concat()).expect("output dimensions are consistent")
}

/// Remaps `src` on a dedicated pool of `workers` threads. The output does
/// not depend on the worker count.
pub fn remap_with_workers(
    src: &RasterImage,
    job: &RemapJob,
    workers: usize,
) -> Result<RasterImage, RasterError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| RasterError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| remap(src, job)))
}
