use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MapError {
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("point ({u}, {v}) lies outside the unit disc")]
    OutsideDisc { u: f64, v: f64 },
    #[error("point ({x}, {y}) lies outside the square [-1, 1]²")]
    OutsideSquare { x: f64, y: f64 },
    #[error("radicand {radicand} is negative beyond roundoff; input is outside the mapping domain")]
    NegativeRadicand { radicand: f64 },
    #[error("squelching parameter q = {0} is outside [1e-6, 1]")]
    InvalidSquelch(f64),
    #[error("mapping `{0}` requires a squelching parameter q")]
    MissingSquelch(String),
    #[error("mapping `{0}` does not take a squelching parameter")]
    UnexpectedSquelch(String),
    #[error("unknown mapping id `{0}`")]
    UnknownMapping(String),
    #[error("root finder did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("argument ({re}, {im}) is too close to a singularity of the mapping")]
    Singularity { re: f64, im: f64 },
    #[error("elliptic integral duplication did not converge; amplitude lies on a branch cut")]
    BranchCut,
    #[error("finite-difference stencil leaves the domain")]
    StencilOutsideDomain,
    #[error("finite-difference step {0} is outside [1e-7, 1e-3]")]
    InvalidStep(f64),
    #[error("angle is undefined at the origin")]
    Origin,
    #[error("grid size {0} must be odd and at least 11")]
    InvalidGrid(usize),
}
