use super::simplicial::is_subset;
use super::{sorted, Face, SimplicialComplex, Subdivision};
use crate::error::{Error, Result};

/// Dual block decomposition of a complex inside its barycentric subdivision.
///
/// The block of a face `I` is the subcomplex of chains all of whose faces
/// contain `I`; the block of the empty face is the whole subdivision.
#[derive(Debug, Clone)]
pub struct DualComplex {
    base: SimplicialComplex,
    subdivision: Subdivision,
}

impl DualComplex {
    pub fn new(base: SimplicialComplex) -> Self {
        let subdivision = base.barycentric_subdivision();
        DualComplex { base, subdivision }
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn subdivision(&self) -> &Subdivision {
        &self.subdivision
    }

    /// Facets of the block of `face`, as simplices of the subdivision.
    pub fn block(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let face = sorted(face.to_vec());
        if !self.base.is_face(&face) {
            return Err(Error::NotAFace(face));
        }
        let allowed: Vec<bool> = self.subdivision.labels.iter().map(|l| is_subset(&face, l)).collect();
        let restricted: Vec<Face> = self
            .subdivision
            .complex
            .facets()
            .iter()
            .map(|chain| chain.iter().copied().filter(|&v| allowed[v]).collect())
            .collect();
        SimplicialComplex::from_faces(self.subdivision.labels.len(), restricted)
    }

    /// Whether the block of `outer` contains the block of `inner`.
    pub fn block_contains(&self, outer: &[usize], inner: &[usize]) -> Result<bool> {
        let a = self.block(outer)?;
        let b = self.block(inner)?;
        Ok(b.facets().iter().all(|f| a.is_face(f)))
    }

    /// Labels of a subdivision simplex, as a chain of faces.
    pub fn chain_labels(&self, simplex: &[usize]) -> Vec<Face> {
        simplex.iter().map(|&v| self.subdivision.labels[v].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_of_simplex_boundary() {
        let d = DualComplex::new(SimplicialComplex::simplex_boundary(4));
        let whole = d.block(&[]).unwrap();
        assert_eq!(whole.facets().len(), 24);
        for face in d.base().faces() {
            let b = d.block(&face).unwrap();
            assert_eq!(b.dimension(), Some(3 - face.len()));
            for chain in b.facets() {
                assert!(d.chain_labels(chain).iter().all(|l| is_subset(&face, l)));
            }
        }
    }

    #[test]
    fn containment_reverses_inclusion() {
        let d = DualComplex::new(SimplicialComplex::simplex_boundary(4));
        let faces = d.base().faces();
        for i in &faces {
            for j in &faces {
                assert_eq!(d.block_contains(i, j).unwrap(), is_subset(i, j), "{i:?} {j:?}");
            }
        }
        assert!(d.block_contains(&[], &[0, 1]).unwrap());
    }
}
