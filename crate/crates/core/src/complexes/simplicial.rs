use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::{sorted, Face, Issue, Report};
use crate::error::{Error, Result};

/// A finite abstract simplicial complex stored through its facets.
///
/// Faces are implicit: a set is a face iff it lies in some facet. The
/// constructor keeps the facet list as given (sorted, deduplicated) so that
/// `validate` can report non-maximal entries; `from_faces` normalizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<Face>,
}

/// Barycentric subdivision together with the face of the original complex
/// labelling each new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub labels: Vec<Face>,
}

impl Subdivision {
    pub fn vertex_of(&self, face: &[usize]) -> Option<usize> {
        self.labels.iter().position(|l| l.as_slice() == face)
    }
}

impl SimplicialComplex {
    pub fn new(vertex_count: usize, facets: Vec<Face>) -> Result<Self> {
        let mut fs: Vec<Face> = facets.into_iter().map(sorted).filter(|f| !f.is_empty()).collect();
        for f in &fs {
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::Invalid(format!(
                    "facet uses vertex {} but the complex has {} vertices",
                    v + 1,
                    vertex_count
                )));
            }
        }
        fs.sort();
        fs.dedup();
        Ok(SimplicialComplex { vertex_count, facets: fs })
    }

    /// Builds the complex generated by `faces`, keeping only maximal ones.
    pub fn from_faces(vertex_count: usize, faces: Vec<Face>) -> Result<Self> {
        let c = Self::new(vertex_count, faces)?;
        let maximal: Vec<Face> = c
            .facets
            .iter()
            .filter(|f| !c.facets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { vertex_count, facets: maximal })
    }

    /// Boundary of the `(k-1)`-simplex on `k` vertices.
    pub fn simplex_boundary(k: usize) -> Self {
        let facets = (0..k).map(|skip| (0..k).filter(|&v| v != skip).collect()).collect();
        Self::new(k, facets).expect("indices in range")
    }

    /// Full simplex on `k` vertices.
    pub fn simplex(k: usize) -> Self {
        Self::new(k, vec![(0..k).collect()]).expect("indices in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        s.is_empty() || self.facets.iter().any(|f| is_subset(s, f))
    }

    pub fn facet_index(&self, f: &[usize]) -> Option<usize> {
        self.facets.iter().position(|g| g.as_slice() == f)
    }

    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Vec::len).all_equal()
    }

    /// All nonempty faces, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            for k in 1..=f.len() {
                for s in f.iter().copied().combinations(k) {
                    all.insert(s);
                }
            }
        }
        let mut v: Vec<Face> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Number of faces of each dimension, `f_0, f_1, …`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for f in self.faces() {
            out[f.len() - 1] += 1;
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.facets.iter().flatten().copied().collect()
    }

    /// Minimal subsets of the covered vertex set that are not faces, plus
    /// uncovered vertices as singletons.
    pub fn minimal_non_faces(&self) -> Vec<Face> {
        let verts = self.vertices();
        let mut out = BTreeSet::new();
        for v in 0..self.vertex_count {
            if !verts.contains(&v) {
                out.insert(vec![v]);
            }
        }
        for f in self.faces().into_iter().chain(std::iter::once(Vec::new())) {
            for &v in &verts {
                if f.contains(&v) {
                    continue;
                }
                let s = sorted(f.iter().copied().chain([v]).collect());
                if self.is_face(&s) {
                    continue;
                }
                let minimal = (0..s.len()).all(|skip| {
                    let t: Face = s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &x)| x).collect();
                    self.is_face(&t)
                });
                if minimal {
                    out.insert(s);
                }
            }
        }
        let mut v: Vec<Face> = out.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Closed star: the facets containing `face`, with all their faces.
    pub fn star(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let face = sorted(face.to_vec());
        if !self.is_face(&face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self.facets.iter().filter(|f| is_subset(&face, f)).cloned().collect();
        SimplicialComplex::new(self.vertex_count, facets)
    }

    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let face = sorted(face.to_vec());
        if !self.is_face(&face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| is_subset(&face, f))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
            .collect();
        SimplicialComplex::from_faces(self.vertex_count, facets)
    }

    /// Checks vertex coverage and that the facet list is an antichain.
    pub fn validate(&self) -> Report {
        let mut report = Report::default();
        let verts = self.vertices();
        for v in 0..self.vertex_count {
            if !verts.contains(&v) {
                report.issues.push(Issue::UncoveredVertex(v));
            }
        }
        for a in &self.facets {
            for b in &self.facets {
                if a.len() < b.len() && is_subset(a, b) {
                    report.issues.push(Issue::NotAntichain { smaller: a.clone(), larger: b.clone() });
                }
            }
        }
        report
    }

    /// Vertices of the subdivision are the nonempty faces; simplices are
    /// chains of faces under inclusion.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        let labels = self.faces();
        let index: BTreeMap<&Face, usize> = labels.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut facets = Vec::new();
        for f in &self.facets {
            for order in f.iter().copied().permutations(f.len()) {
                let mut chain = Vec::with_capacity(order.len());
                let mut cur: Face = Vec::new();
                for v in order {
                    cur = sorted(cur.iter().copied().chain([v]).collect());
                    chain.push(index[&cur]);
                }
                facets.push(chain);
            }
        }
        let complex = SimplicialComplex::from_faces(labels.len(), facets).expect("labels index the faces");
        Subdivision { complex, labels }
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}
