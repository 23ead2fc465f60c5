//! Numerical checks of the geometric properties of each mapping: radiality,
//! squircularity, conformality and area distortion.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::mapping::{Direction, MappingId, MappingKind};
use crate::{MapError, Point, SquarePoint};

/// Default central-difference step.
pub const DEFAULT_STEP: f64 = 1e-5;
/// Distance kept from the square's edges by report grids.
pub const GRID_MARGIN: f64 = 0.005;

pub const ROUNDTRIP_CLOSED_FORM: f64 = 1e-12;
pub const ROUNDTRIP_NUMERIC: f64 = 1e-10;
pub const ROUNDTRIP_CONFORMAL: f64 = 1e-8;
pub const ANGLE_RADIAL: f64 = 1e-12;
pub const ANGLE_NON_RADIAL: f64 = 0.01;
pub const CR_CONFORMAL: f64 = 1e-4;
pub const CR_NON_CONFORMAL: f64 = 0.05;
pub const SQUIRCULARITY: f64 = 1e-12;
pub const AREA_SPREAD: f64 = 1.05;

/// The differential of a mapping at a point, `[[j11, j12], [j21, j22]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobian2 {
    pub j11: f64,
    pub j12: f64,
    pub j21: f64,
    pub j22: f64,
}

impl Jacobian2 {
    pub const IDENTITY: Jacobian2 = Jacobian2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(j11: f64, j12: f64, j21: f64, j22: f64) -> Self {
        Self { j11, j12, j21, j22 }
    }

    pub fn det(&self) -> f64 {
        self.j11 * self.j22 - self.j12 * self.j21
    }

    pub fn frobenius(&self) -> f64 {
        (self.j11 * self.j11 + self.j12 * self.j12 + self.j21 * self.j21 + self.j22 * self.j22)
            .sqrt()
    }

    /// See [`cr_residual`].
    pub fn cr_residual(&self) -> f64 {
        cr_residual(self)
    }
}

/// Central-difference Jacobian of `mapping` applied in `direction` at the
/// source-domain point `(a, b)`.
pub fn jacobian_fd(
    mapping: &MappingId,
    direction: Direction,
    (a, b): (f64, f64),
    h: f64,
) -> Result<Jacobian2, MapError> {
    if !(1e-7..=1e-3).contains(&h) {
        return Err(MapError::InvalidStep(h));
    }
    let inside = |a: f64, b: f64| match direction {
        Direction::DiscToSquare => a * a + b * b <= 1.0,
        Direction::SquareToDisc => a.abs().max(b.abs()) <= 1.0,
    };
    let stencil = [(a + h, b), (a - h, b), (a, b + h), (a, b - h)];
    if stencil.iter().any(|&(s, t)| !inside(s, t)) {
        return Err(MapError::StencilOutsideDomain);
    }
    let mut out = [(0.0, 0.0); 4];
    for (o, &(s, t)) in out.iter_mut().zip(&stencil) {
        *o = mapping.map_coords(direction, s, t)?;
    }
    let d = 2.0 * h;
    Ok(Jacobian2::new(
        (out[0].0 - out[1].0) / d,
        (out[2].0 - out[3].0) / d,
        (out[0].1 - out[1].1) / d,
        (out[2].1 - out[3].1) / d,
    ))
}

/// Scale-invariant Cauchy-Riemann defect
/// `(|j11 − j22| + |j12 + j21|) / ‖J‖_F`; zero exactly for orientation
/// preserving similarities.
pub fn cr_residual(j: &Jacobian2) -> f64 {
    ((j.j11 - j.j22).abs() + (j.j12 + j.j21).abs()) / j.frobenius().max(1e-30)
}

/// Wraps an angle difference into `(−π, π]`.
pub fn wrap_angle(d: f64) -> f64 {
    let w = d.rem_euclid(2.0 * PI);
    if w > PI {
        w - 2.0 * PI
    } else {
        w
    }
}

/// Absolute change of polar angle when `p` is mapped.
pub fn radial_deviation(mapping: &MappingId, p: Point) -> Result<f64, MapError> {
    let (a, b) = p.coords();
    if a == 0.0 && b == 0.0 {
        return Err(MapError::Origin);
    }
    let (c, d) = mapping.map(p)?.coords();
    Ok(wrap_angle(b.atan2(a) - d.atan2(c)).abs())
}

/// Measured properties of one mapping over an interior square grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistortionReport {
    pub mapping: MappingId,
    pub grid_n: usize,
    /// Largest sup-norm error of square → disc → square.
    pub max_roundtrip: f64,
    /// Largest change of polar angle under square → disc (radians).
    pub max_angle_dev: f64,
    pub cr_residual_max: f64,
    /// Extremes of `|det J|` of the square → disc map.
    pub area_ratio_min: f64,
    pub area_ratio_max: f64,
    /// Largest continuum residual `|x² + y² − t^(2n−2)x²y² − t²|`, for
    /// mappings that send a squircle continuum onto circles.
    pub squircularity_residual_max: Option<f64>,
}

#[derive(Clone, Copy)]
struct Stats {
    roundtrip: f64,
    angle: f64,
    cr: f64,
    area_min: f64,
    area_max: f64,
    squircle: f64,
}

impl Stats {
    const EMPTY: Stats = Stats {
        roundtrip: 0.0,
        angle: 0.0,
        cr: 0.0,
        area_min: f64::INFINITY,
        area_max: 0.0,
        squircle: 0.0,
    };

    fn merge(self, o: Stats) -> Stats {
        Stats {
            roundtrip: self.roundtrip.max(o.roundtrip),
            angle: self.angle.max(o.angle),
            cr: self.cr.max(o.cr),
            area_min: self.area_min.min(o.area_min),
            area_max: self.area_max.max(o.area_max),
            squircle: self.squircle.max(o.squircle),
        }
    }
}

fn measure(mapping: &MappingId, exponent: Option<f64>, x: f64, y: f64) -> Result<Stats, MapError> {
    let p = SquarePoint::new(x, y)?;
    let d = mapping.square_to_disc(p);
    let back = mapping.disc_to_square(d)?;
    let angle = if x == 0.0 && y == 0.0 {
        0.0
    } else {
        radial_deviation(mapping, Point::Square(p))?
    };
    let j = jacobian_fd(mapping, Direction::SquareToDisc, (x, y), DEFAULT_STEP)?;
    let area = j.det().abs();
    let squircle = exponent.map_or(0.0, |n| {
        let t2 = d.u * d.u + d.v * d.v;
        (x * x + y * y - t2.powf(n - 1.0) * x * x * y * y - t2).abs()
    });
    Ok(Stats {
        roundtrip: (back.x - x).abs().max((back.y - y).abs()),
        angle,
        cr: j.cr_residual(),
        area_min: area,
        area_max: area,
        squircle,
    })
}

/// Grid coordinate `i` of `n` spanning `[−1 + margin, 1 − margin]`.
pub fn grid_coord(i: usize, n: usize, margin: f64) -> f64 {
    let span = 1.0 - margin;
    -span + 2.0 * span * i as f64 / (n - 1) as f64
}

/// Measures `mapping` on an `n × n` interior grid. Rows run in parallel;
/// every reduction is a max or min, so the result does not depend on
/// scheduling.
pub fn verify_report(mapping: &MappingId, grid_n: usize) -> Result<DistortionReport, MapError> {
    if grid_n < 11 || grid_n.is_multiple_of(2) {
        return Err(MapError::InvalidGrid(grid_n));
    }
    let exponent = mapping.squircle_exponent();
    let rows: Vec<Result<Stats, MapError>> = (0..grid_n)
        .into_par_iter()
        .map(|j| {
            let y = grid_coord(j, grid_n, GRID_MARGIN);
            (0..grid_n).try_fold(Stats::EMPTY, |acc, i| {
                let x = grid_coord(i, grid_n, GRID_MARGIN);
                Ok(acc.merge(measure(mapping, exponent, x, y)?))
            })
        })
        .collect();
    let mut total = Stats::EMPTY;
    for row in rows {
        total = total.merge(row?);
    }
    Ok(DistortionReport {
        mapping: *mapping,
        grid_n,
        max_roundtrip: total.roundtrip,
        max_angle_dev: total.angle,
        cr_residual_max: total.cr,
        area_ratio_min: total.area_min,
        area_ratio_max: total.area_max,
        squircularity_residual_max: exponent.map(|_| total.squircle),
    })
}

impl DistortionReport {
    /// Single-line JSON rendering.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report fields are serializable")
    }

    pub fn roundtrip_threshold(&self) -> f64 {
        let kind = self.mapping.kind();
        if kind.is_conformal() {
            ROUNDTRIP_CONFORMAL
        } else if kind.has_numeric_inverse() {
            ROUNDTRIP_NUMERIC
        } else {
            ROUNDTRIP_CLOSED_FORM
        }
    }

    /// The thresholds that apply to this mapping which the report misses.
    /// Conformality is only judged for the four main mappings, whose
    /// classification is established; the others are reported as measured.
    pub fn failed_checks(&self) -> Vec<String> {
        let kind = self.mapping.kind();
        let mut failed = Vec::new();
        let mut check = |ok: bool, what: String| {
            if !ok {
                failed.push(what);
            }
        };
        let rt = self.roundtrip_threshold();
        check(self.max_roundtrip < rt, format!("max_roundtrip {:e} ≥ {rt:e}", self.max_roundtrip));
        if kind.is_radial() {
            check(
                self.max_angle_dev < ANGLE_RADIAL,
                format!("max_angle_dev {:e} ≥ {ANGLE_RADIAL:e}", self.max_angle_dev),
            );
        } else if kind != MappingKind::SquelchedEllipticalGrid {
            check(
                self.max_angle_dev > ANGLE_NON_RADIAL,
                format!("max_angle_dev {:e} ≤ {ANGLE_NON_RADIAL}", self.max_angle_dev),
            );
        }
        match kind {
            MappingKind::SchwarzChristoffel => check(
                self.cr_residual_max < CR_CONFORMAL,
                format!("cr_residual_max {:e} ≥ {CR_CONFORMAL:e}", self.cr_residual_max),
            ),
            MappingKind::SimpleStretch | MappingKind::FgSquircular | MappingKind::EllipticalGrid => {
                check(
                    self.cr_residual_max > CR_NON_CONFORMAL,
                    format!("cr_residual_max {:e} ≤ {CR_NON_CONFORMAL}", self.cr_residual_max),
                )
            }
            _ => {}
        }
        let spread = self.area_ratio_max / self.area_ratio_min;
        check(spread > AREA_SPREAD, format!("area spread {spread} ≤ {AREA_SPREAD}"));
        if let Some(s) = self.squircularity_residual_max {
            check(s < SQUIRCULARITY, format!("squircularity residual {s:e} ≥ {SQUIRCULARITY:e}"));
        }
        failed
    }
}
