use std::collections::HashMap;

use num_traits::Zero;

use super::algebra::GradedAlgebra;
use crate::complexes::{CharacteristicPair, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::scalar::unit;
use crate::exact::{monomials_of_degree, Matrix, Monomial, Scalar, Vector};

/// `Q[v_1, …, v_m] / (I_K + (θ_1, …, θ_k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SRPresentation {
    pub complex: SimplicialComplex,
    /// Minimal non-faces of the complex: the monomial generators of `I_K`.
    pub nonfaces: Vec<Face>,
    /// Coefficients of each linear form `θ_j = Σ_i c_{ji} v_i`.
    pub linear_forms: Vec<Vector>,
}

impl SRPresentation {
    pub fn new(complex: SimplicialComplex, linear_forms: Vec<Vector>) -> Result<Self> {
        let m = complex.vertex_count();
        if let Some(bad) = linear_forms.iter().find(|t| t.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: bad.len() });
        }
        let nonfaces = complex.minimal_non_faces();
        Ok(SRPresentation { complex, nonfaces, linear_forms })
    }

    /// `θ_j = Σ_i ⟨e_j^*, ℓ_i⟩ v_i` for the standard character basis.
    pub fn from_pair(pair: &CharacteristicPair) -> Self {
        let forms = (0..pair.dim()).map(|j| pair.lambda().iter().map(|l| l[j].clone()).collect()).collect();
        SRPresentation::new(pair.complex().clone(), forms).expect("lambda has one vector per vertex")
    }

    pub fn nvars(&self) -> usize {
        self.complex.vertex_count()
    }

    fn is_face_monomial(&self, mono: &[u32]) -> bool {
        let support: Face = (0..mono.len()).filter(|&i| mono[i] > 0).collect();
        self.complex.is_face(&support)
    }

    /// Degrees `0..=top` of the quotient. Each degree is computed on the
    /// face-supported monomials, which span the face ring, modulo the span
    /// of `θ_j μ` for face-supported `μ` of one degree less.
    pub fn quotient(&self, top: usize) -> Result<GradedAlgebra> {
        let m = self.nvars();
        let mut pieces = Vec::with_capacity(top + 1);
        let mut previous: Vec<Monomial> = Vec::new();
        for d in 0..=top {
            let monos: Vec<Monomial> =
                monomials_of_degree(m, d as u32).into_iter().filter(|a| self.is_face_monomial(a)).collect();
            let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, a)| (a, i)).collect();
            let mut relations = Vec::new();
            for mu in &previous {
                for theta in &self.linear_forms {
                    let mut row = vec![Scalar::zero(); monos.len()];
                    for (i, c) in theta.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut next = mu.clone();
                        next[i] += 1;
                        if let Some(&k) = index.get(&next) {
                            row[k] += c;
                        }
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        relations.push(row);
                    }
                }
            }
            // Rows of the image map span the annihilator of the relations.
            let dual: Vec<Vector> = if relations.is_empty() {
                (0..monos.len()).map(|j| unit(monos.len(), j)).collect()
            } else {
                Matrix::from_rows(&relations, monos.len())?.kernel()
            };
            let images =
                if dual.is_empty() { Matrix::zeros(0, monos.len()) } else { Matrix::from_rows(&dual, monos.len())? };
            pieces.push((monos.clone(), images));
            previous = monos;
        }
        GradedAlgebra::from_images(m, pieces)
    }
}

/// Graded dimensions of the Stanley–Reisner quotient in degrees `0..=n`.
pub fn sr_quotient_dims(pair: &CharacteristicPair) -> Result<Vec<usize>> {
    Ok(SRPresentation::from_pair(pair).quotient(pair.dim())?.dims())
}
