use thiserror::Error;

use crate::polytope::OriginPosition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid facet combinatorics: {0}")]
    InvalidCombinatorics(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation not supported in dimension {0}")]
    UnsupportedDimension(usize),

    #[error("the hyperplane orthogonal to the direction misses the polytope")]
    EmptySection,

    #[error("zero direction")]
    ZeroDirection,

    #[error("direction lies on the wall of vertex {0}")]
    OnWall(usize),

    #[error("translation lies on affine hyperplane {0}")]
    OnHyperplane(usize),

    #[error("numerator of the radial piece is not divisible by |x|^2")]
    DivisibilityFailure,

    #[error("chamber mismatch: {0}")]
    ChamberMismatch(String),

    #[error("radial function is not a polynomial of degree <= {bound} in t")]
    DegreeExceeded { bound: usize },

    #[error("the chamber's crossed edges are parallel")]
    ParallelEdges,

    #[error("the polytope is not centrally symmetric about the origin")]
    NotSymmetric,

    #[error("the polytope is not an axis-aligned box")]
    NotABox,

    #[error("origin is not in the interior of the polytope ({0:?})")]
    OriginNotInterior(OriginPosition),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Internal(String),
}
