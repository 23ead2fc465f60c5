//! Analytical mappings between the unit disc and the square `[-1, 1]²`.
//!
//! Every mapping comes as a forward/inverse pair:
//!
//! - **radial** maps that move points only along rays from the origin:
//!   simple stretching, the FG-squircular map and its 2-, 3-, 3/2-, 1/2- and
//!   4-squircular variants ([`radial`]);
//! - the **elliptical grid** map and its squelched family ([`grid`]);
//! - the conformal **Schwarz-Christoffel** map built on complex Jacobi
//!   elliptic functions ([`conformal`]).
//!
//! [`MappingId`] catalogues them behind one dispatch surface and
//! [`analysis`] measures their geometric properties numerically.

pub mod analysis;
pub mod canonical;
pub mod conformal;
mod error;
pub mod grid;
mod mapping;
pub mod radial;

pub use canonical::{axis_passthrough, safe_sqrt, sgn, DiscPoint, Point, SquarePoint};
pub use error::MapError;
pub use grid::SquelchParam;
pub use mapping::{Direction, MappingId, MappingKind};
pub use radial::RadialProfile;
