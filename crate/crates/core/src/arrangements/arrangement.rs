use std::collections::BTreeSet;

use super::AffineSubspace;
use crate::complexes::{CharacteristicPair, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::scalar::{unit, zeros};
use crate::exact::{Scalar, Vector};

/// A finite family of affine subspaces of a common `Q^n`, indexed by
/// `0..s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceArrangement {
    ambient: usize,
    members: Vec<AffineSubspace>,
}

impl SubspaceArrangement {
    pub fn new(ambient: usize, members: Vec<AffineSubspace>) -> Result<Self> {
        for m in &members {
            if m.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: m.ambient_dim() });
            }
        }
        Ok(SubspaceArrangement { ambient, members })
    }

    /// Hyperplanes `form_i · x = rhs_i`.
    pub fn hyperplanes(ambient: usize, forms: Vec<(Vector, Scalar)>) -> Result<Self> {
        let mut members = Vec::with_capacity(forms.len());
        for (a, b) in forms {
            if a.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: a.len() });
            }
            members.push(AffineSubspace::hyperplane(a, b)?);
        }
        Ok(SubspaceArrangement { ambient, members })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[AffineSubspace] {
        &self.members
    }

    /// Defining forms, when every member is a hyperplane.
    pub fn forms(&self) -> Result<Vec<(Vector, Scalar)>> {
        self.members.iter().enumerate().map(|(i, m)| m.form().ok_or(Error::NotHyperplane(i))).collect()
    }

    /// `⋂_{i ∈ I} L_i`; the empty index set gives the ambient space.
    pub fn intersect(&self, index: &[usize]) -> Result<Option<AffineSubspace>> {
        let mut cur = AffineSubspace::ambient(self.ambient);
        for &i in index {
            let m = self.members.get(i).ok_or_else(|| Error::Invalid(format!("no member {}", i + 1)))?;
            match cur.intersect(m)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Nonempty intersections over nonempty index sets, found depth first
    /// so that supersets of an empty intersection are never visited.
    pub(crate) fn nonempty_intersections(&self) -> Vec<(Face, AffineSubspace)> {
        let mut out = Vec::new();
        let mut stack: Vec<(Face, AffineSubspace)> = vec![(Vec::new(), AffineSubspace::ambient(self.ambient))];
        while let Some((face, space)) = stack.pop() {
            let start = face.last().map_or(0, |&l| l + 1);
            for j in start..self.members.len() {
                if let Some(next) = space.intersect(&self.members[j]).expect("shared ambient dimension") {
                    let mut f = face.clone();
                    f.push(j);
                    out.push((f.clone(), next.clone()));
                    stack.push((f, next));
                }
            }
        }
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }
}

/// The hyperplane arrangement `H_i = {ℓ_i(x) = h_i}` of a characteristic pair.
pub fn build_arrangement(pair: &CharacteristicPair, h: &[Scalar]) -> Result<SubspaceArrangement> {
    if h.len() != pair.vertex_count() {
        return Err(Error::DimensionMismatch { expected: pair.vertex_count(), found: h.len() });
    }
    let forms = pair.lambda().iter().cloned().zip(h.iter().cloned()).collect();
    SubspaceArrangement::hyperplanes(pair.dim(), forms)
}

/// Nerve of an arrangement: index sets with nonempty intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nerve {
    complex: SimplicialComplex,
}

impl Nerve {
    pub fn from_complex(complex: SimplicialComplex) -> Self {
        Nerve { complex }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn index_count(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn facets(&self) -> &[Face] {
        self.complex.facets()
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        self.complex.is_face(s)
    }

    /// Equality as complexes on the shared labeled index set.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> bool {
        self.complex.vertex_count() == other.vertex_count()
            && self.complex.faces().into_iter().collect::<BTreeSet<_>>()
                == other.faces().into_iter().collect::<BTreeSet<_>>()
    }
}

pub fn nerve(a: &SubspaceArrangement) -> Nerve {
    let faces = a.nonempty_intersections().into_iter().map(|(f, _)| f).collect();
    let complex = SimplicialComplex::from_faces(a.len(), faces).expect("indices in range");
    Nerve { complex }
}

/// `kx ≥ ky`: every face of `kx` is a face of `ky`.
pub fn dominates(kx: &Nerve, ky: &Nerve) -> Result<bool> {
    if kx.index_count() != ky.index_count() {
        return Err(Error::IndexSetMismatch(kx.index_count(), ky.index_count()));
    }
    Ok(kx.facets().iter().all(|f| ky.is_face(f)))
}

/// Existence of a map compatible with the two arrangements, decided by
/// domination of their nerves.
pub fn compatible_map_exists(a: &SubspaceArrangement, b: &SubspaceArrangement) -> Result<bool> {
    dominates(&nerve(a), &nerve(b))
}

/// Realizes a complex as the nerve of affine subspaces: the faces
/// `F_0, …, F_{N-1}` become the affinely independent points `0, e_1, …,
/// e_{N-1}`, and vertex `i` becomes the affine hull of the faces containing it.
pub fn realize_nerve(d: &SimplicialComplex) -> Result<SubspaceArrangement> {
    if d.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let faces = d.faces();
    let dim = faces.len() - 1;
    let point = |k: usize| if k == 0 { zeros(dim) } else { unit(dim, k - 1) };
    let mut members = Vec::with_capacity(d.vertex_count());
    for v in 0..d.vertex_count() {
        let pts: Vec<Vector> =
            faces.iter().enumerate().filter(|(_, f)| f.contains(&v)).map(|(k, _)| point(k)).collect();
        if pts.is_empty() {
            return Err(Error::Invalid(format!("vertex {} lies in no face", v + 1)));
        }
        members.push(AffineSubspace::from_points(&pts)?);
    }
    SubspaceArrangement::new(dim, members)
}
