//! Simplicial complexes, oriented spheres, complete simplicial fans and
//! characteristic maps.
//!
//! Vertices are `0..m` internally; files and reports use `1..=m`.

mod cells;
mod characteristic;
mod dual;
mod fan;
mod simplicial;
mod sphere;

use std::fmt;

pub use cells::{cell_vector, generic_vector, incoming_index, random_generic_vector, IncomingIndex};
pub use characteristic::{validate_characteristic, CharacteristicPair, Mode};
pub use dual::DualComplex;
pub use fan::Fan;
pub use simplicial::{SimplicialComplex, Subdivision};
pub use sphere::OrientedSphere;

use crate::exact::Vector;

/// A simplex given by its sorted vertex indices.
pub type Face = Vec<usize>;

/// Renders a face with 1-based labels, e.g. `{1,3}`.
pub fn fmt_face(f: &[usize]) -> String {
    let parts: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub(crate) fn sorted(mut f: Face) -> Face {
    f.sort_unstable();
    f.dedup();
    f
}

/// One violated invariant found by a validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    VertexOutOfRange { facet: Face, vertex: usize },
    UncoveredVertex(usize),
    NotAntichain { smaller: Face, larger: Face },
    WrongConeSize { cone: Face, expected: usize },
    RayDimension { ray: usize, expected: usize },
    ZeroRay(usize),
    DependentRays(Face),
    NotPure,
    RidgeDegree { ridge: Face, count: usize },
    NotOrientable { ridge: Face },
    Disconnected,
    NotComplete { direction: Vector, covering: usize },
    LambdaCount { expected: usize, found: usize },
    LambdaDimension { vertex: usize, expected: usize },
    DependentFunctionals(Face),
    NonIntegerFunctional(usize),
    NotUnimodular { facet: Face, det: String },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::VertexOutOfRange { facet, vertex } => {
                write!(f, "facet {} uses vertex {} outside the vertex range", fmt_face(facet), vertex + 1)
            }
            Issue::UncoveredVertex(v) => write!(f, "vertex {} lies in no facet", v + 1),
            Issue::NotAntichain { smaller, larger } => {
                write!(f, "facet {} ⊂ {}", fmt_face(smaller), fmt_face(larger))
            }
            Issue::WrongConeSize { cone, expected } => {
                write!(f, "cone {} has {} rays, expected {}", fmt_face(cone), cone.len(), expected)
            }
            Issue::RayDimension { ray, expected } => {
                write!(f, "ray {} does not have {} coordinates", ray + 1, expected)
            }
            Issue::ZeroRay(r) => write!(f, "ray {} is zero", r + 1),
            Issue::DependentRays(c) => write!(f, "rays of cone {} are linearly dependent", fmt_face(c)),
            Issue::NotPure => write!(f, "complex is not pure"),
            Issue::RidgeDegree { ridge, count } => write!(
                f,
                "ridge {} in {} facet{} (pseudomanifold needs 2)",
                fmt_face(ridge),
                count,
                if *count == 1 { "" } else { "s" }
            ),
            Issue::NotOrientable { ridge } => {
                write!(f, "orientations do not cancel on ridge {}", fmt_face(ridge))
            }
            Issue::Disconnected => write!(f, "facets are not connected through ridges"),
            Issue::NotComplete { direction, covering } => write!(
                f,
                "not complete: direction {} lies in {} maximal cones",
                crate::exact::scalar::fmt_vec(direction),
                covering
            ),
            Issue::LambdaCount { expected, found } => {
                write!(f, "characteristic map has {found} values, expected {expected}")
            }
            Issue::LambdaDimension { vertex, expected } => {
                write!(f, "functional of vertex {} does not have {} coordinates", vertex + 1, expected)
            }
            Issue::DependentFunctionals(face) => write!(f, "functionals dependent on face {}", fmt_face(face)),
            Issue::NonIntegerFunctional(v) => write!(f, "functional of vertex {} is not integral", v + 1),
            Issue::NotUnimodular { facet, det } => {
                write!(f, "facet {} has determinant {det}, expected ±1", fmt_face(facet))
            }
        }
    }
}

/// Diagnostic outcome of a validator: empty means the object is valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub issues: Vec<Issue>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        self.issues.iter().map(|i| i.to_string()).collect()
    }

    pub fn merge(&mut self, other: Report) {
        self.issues.extend(other.issues);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        write!(f, "{}", self.messages().join("; "))
    }
}
