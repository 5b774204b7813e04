use thiserror::Error;

use crate::complexes::{fmt_face, Face};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("polynomial has {found} variables, expected {expected}")]
    VariableMismatch { expected: usize, found: usize },

    #[error("{} is not a face of the complex", fmt_face(.0))]
    NotAFace(Face),

    #[error("{} is not a facet of the complex", fmt_face(.0))]
    NotAFacet(Face),

    #[error(
        "vector is not generic: it lies on the wall spanned by rays {} of cone {}",
        fmt_face(wall),
        fmt_face(cone)
    )]
    NonGeneric { cone: Face, wall: Face },

    #[error("point lies on the image of the map")]
    PointOnImage,

    #[error("ray casting stayed degenerate after {0} directions")]
    RayRetriesExhausted(usize),

    #[error("simplex is degenerate")]
    DegenerateSimplex,

    #[error("the set is empty")]
    EmptySet,

    #[error("the complex is empty")]
    EmptyComplex,

    #[error("member {0} is not a hyperplane")]
    NotHyperplane(usize),

    #[error("arrangements are indexed by different sets ({0} vs {1})")]
    IndexSetMismatch(usize, usize),

    #[error("the form is identically zero")]
    ZeroForm,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
