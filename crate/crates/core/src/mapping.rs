use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::canonical::{DiscPoint, Point, SquarePoint};
use crate::grid::{self, SquelchParam};
use crate::radial::{self, RadialProfile};
use crate::{conformal, MapError};

/// The mapping families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MappingKind {
    SimpleStretch,
    FgSquircular,
    TwoSquircular,
    ThreeSquircular,
    ThreeHalvesSquircular,
    HalfSquircular,
    FourSquircular,
    EllipticalGrid,
    SquelchedEllipticalGrid,
    SchwarzChristoffel,
}

impl MappingKind {
    pub const ALL: [MappingKind; 10] = [
        MappingKind::SimpleStretch,
        MappingKind::FgSquircular,
        MappingKind::TwoSquircular,
        MappingKind::ThreeSquircular,
        MappingKind::ThreeHalvesSquircular,
        MappingKind::HalfSquircular,
        MappingKind::FourSquircular,
        MappingKind::EllipticalGrid,
        MappingKind::SquelchedEllipticalGrid,
        MappingKind::SchwarzChristoffel,
    ];

    /// Command-line identifier.
    pub fn id(self) -> &'static str {
        match self {
            MappingKind::SimpleStretch => "simple-stretch",
            MappingKind::FgSquircular => "fg-squircular",
            MappingKind::TwoSquircular => "2-squircular",
            MappingKind::ThreeSquircular => "3-squircular",
            MappingKind::ThreeHalvesSquircular => "3half-squircular",
            MappingKind::HalfSquircular => "half-squircular",
            MappingKind::FourSquircular => "4-squircular",
            MappingKind::EllipticalGrid => "elliptical-grid",
            MappingKind::SquelchedEllipticalGrid => "squelched-elliptical-grid",
            MappingKind::SchwarzChristoffel => "schwarz-christoffel",
        }
    }

    /// Squircular profile behind a radial kind, if any. Simple stretching is
    /// radial but has no continuum of squircles.
    pub fn profile(self) -> Option<RadialProfile> {
        match self {
            MappingKind::FgSquircular => Some(RadialProfile::One),
            MappingKind::TwoSquircular => Some(RadialProfile::Two),
            MappingKind::ThreeSquircular => Some(RadialProfile::Three),
            MappingKind::ThreeHalvesSquircular => Some(RadialProfile::ThreeHalves),
            MappingKind::HalfSquircular => Some(RadialProfile::Half),
            MappingKind::FourSquircular => Some(RadialProfile::Four),
            _ => None,
        }
    }

    /// Whether every point moves along its ray from the origin.
    pub fn is_radial(self) -> bool {
        self == MappingKind::SimpleStretch || self.profile().is_some()
    }

    pub fn is_conformal(self) -> bool {
        self == MappingKind::SchwarzChristoffel
    }

    /// Whether the inverse is found by root finding rather than a closed form.
    pub fn has_numeric_inverse(self) -> bool {
        self.profile()
            .is_some_and(|p| RadialProfile::NUMERIC.contains(&p))
    }
}

impl fmt::Display for MappingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MappingKind {
    type Err = MapError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MappingKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| MapError::UnknownMapping(s.to_owned()))
    }
}

/// Which way a mapping is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    DiscToSquare,
    SquareToDisc,
}

impl Direction {
    pub fn id(self) -> &'static str {
        match self {
            Direction::DiscToSquare => "disc2square",
            Direction::SquareToDisc => "square2disc",
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Direction::DiscToSquare => Direction::SquareToDisc,
            Direction::SquareToDisc => Direction::DiscToSquare,
        }
    }

    /// Builds a checked point of this direction's source domain.
    pub fn source_point(self, a: f64, b: f64) -> Result<Point, MapError> {
        match self {
            Direction::DiscToSquare => DiscPoint::new(a, b).map(Point::Disc),
            Direction::SquareToDisc => SquarePoint::new(a, b).map(Point::Square),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disc2square" => Ok(Direction::DiscToSquare),
            "square2disc" => Ok(Direction::SquareToDisc),
            _ => Err(format!("unknown direction `{s}` (expected disc2square or square2disc)")),
        }
    }
}

/// A fully parameterized mapping: the kind plus `q` for the squelched grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappingId {
    kind: MappingKind,
    q: Option<SquelchParam>,
}

impl MappingId {
    /// `q` must be given exactly when `kind` is the squelched grid.
    pub fn new(kind: MappingKind, q: Option<f64>) -> Result<Self, MapError> {
        match (kind, q) {
            (MappingKind::SquelchedEllipticalGrid, Some(q)) => Ok(Self {
                kind,
                q: Some(SquelchParam::new(q)?),
            }),
            (MappingKind::SquelchedEllipticalGrid, None) => {
                Err(MapError::MissingSquelch(kind.id().to_owned()))
            }
            (_, Some(_)) => Err(MapError::UnexpectedSquelch(kind.id().to_owned())),
            (_, None) => Ok(Self { kind, q: None }),
        }
    }

    pub fn squelched(q: f64) -> Result<Self, MapError> {
        Self::new(MappingKind::SquelchedEllipticalGrid, Some(q))
    }

    /// Parses a command-line identifier.
    pub fn parse(id: &str, q: Option<f64>) -> Result<Self, MapError> {
        Self::new(id.parse()?, q)
    }

    /// Every mapping, with the given `q` for the squelched grid.
    pub fn catalog(q: SquelchParam) -> Vec<MappingId> {
        MappingKind::ALL
            .into_iter()
            .map(|kind| MappingId {
                kind,
                q: (kind == MappingKind::SquelchedEllipticalGrid).then_some(q),
            })
            .collect()
    }

    pub fn kind(&self) -> MappingKind {
        self.kind
    }

    pub fn q(&self) -> Option<SquelchParam> {
        self.q
    }

    fn squelch(&self) -> SquelchParam {
        self.q.expect("squelched mapping always carries q")
    }

    pub fn square_to_disc(&self, p: SquarePoint) -> DiscPoint {
        match self.kind {
            MappingKind::SimpleStretch => radial::stretch_square_to_disc(p),
            MappingKind::FgSquircular => radial::fgs_square_to_disc(p),
            MappingKind::TwoSquircular => radial::two_sq_square_to_disc(p),
            MappingKind::ThreeSquircular => radial::three_sq_square_to_disc(p),
            MappingKind::ThreeHalvesSquircular
            | MappingKind::HalfSquircular
            | MappingKind::FourSquircular => {
                radial::profile_square_to_disc(self.kind.profile().unwrap(), p)
            }
            MappingKind::EllipticalGrid => grid::eg_square_to_disc(p),
            MappingKind::SquelchedEllipticalGrid => grid::seg_square_to_disc(self.squelch(), p),
            MappingKind::SchwarzChristoffel => conformal::sc_square_to_disc(p),
        }
    }

    pub fn disc_to_square(&self, p: DiscPoint) -> Result<SquarePoint, MapError> {
        match self.kind {
            MappingKind::SimpleStretch => Ok(radial::stretch_disc_to_square(p)),
            MappingKind::FgSquircular => radial::fgs_disc_to_square(p),
            MappingKind::TwoSquircular => radial::two_sq_disc_to_square(p),
            MappingKind::ThreeSquircular => radial::three_sq_disc_to_square(p),
            MappingKind::ThreeHalvesSquircular
            | MappingKind::HalfSquircular
            | MappingKind::FourSquircular => {
                radial::profile_disc_to_square(self.kind.profile().unwrap(), p)
            }
            MappingKind::EllipticalGrid => grid::eg_disc_to_square_trig(p),
            MappingKind::SquelchedEllipticalGrid => grid::seg_disc_to_square(self.squelch(), p),
            MappingKind::SchwarzChristoffel => conformal::sc_disc_to_square(p),
        }
    }

    /// Applies the mapping to a point of either domain, choosing the
    /// direction from the point's type.
    pub fn map(&self, p: Point) -> Result<Point, MapError> {
        match p {
            Point::Disc(d) => self.disc_to_square(d).map(Point::Square),
            Point::Square(s) => Ok(Point::Disc(self.square_to_disc(s))),
        }
    }

    /// Maps raw coordinates in `direction`, validating the input domain.
    pub fn map_coords(&self, direction: Direction, a: f64, b: f64) -> Result<(f64, f64), MapError> {
        Ok(self.map(direction.source_point(a, b)?)?.coords())
    }

    /// Exponent `n` of the squircular continuum `x² + y² − t^(2n−2)x²y² = t²`
    /// whose members map to circles, where one exists.
    pub fn squircle_exponent(&self) -> Option<f64> {
        match self.kind {
            MappingKind::EllipticalGrid => Some(1.0),
            MappingKind::SquelchedEllipticalGrid if self.squelch().q() == 1.0 => Some(1.0),
            k => k.profile().map(RadialProfile::exponent),
        }
    }
}

impl fmt::Display for MappingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            Some(q) => write!(f, "{}(q={q})", self.kind.id()),
            None => f.write_str(self.kind.id()),
        }
    }
}

impl Serialize for MappingId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
