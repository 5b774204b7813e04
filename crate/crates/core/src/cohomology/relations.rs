use itertools::Itertools;
use num_traits::Zero;

use super::algebra::{macaulay_algebra, GradedAlgebra};
use super::operator::DiffOperator;
use crate::complexes::{CharacteristicPair, Face};
use crate::error::{Error, Result};
use crate::exact::scalar::{dot, factorial};
use crate::exact::{MultiPoly, Scalar, Vector};
use crate::virtualpoly::volume_polynomial;

/// The Macaulay algebra of the volume polynomial of `pair`.
pub fn cohomology_ring(pair: &CharacteristicPair) -> Result<GradedAlgebra> {
    macaulay_algebra(&volume_polynomial(pair)?)
}

/// `⟨(Σ h_i [D_i])^n, [X]⟩ = n! Vol(h)`.
pub fn self_intersection(pair: &CharacteristicPair, h: &[Scalar]) -> Result<Scalar> {
    if h.len() != pair.vertex_count() {
        return Err(Error::DimensionMismatch { expected: pair.vertex_count(), found: h.len() });
    }
    let n = pair.dim() as u32;
    Ok(volume_polynomial(pair)?.eval(h)? * Scalar::from_integer(factorial(n)))
}

/// `ε((Σ h_i ∂_i)^n)` computed inside an algebra.
pub fn intersection_number(a: &GradedAlgebra, h: &[Scalar]) -> Result<Scalar> {
    if h.len() != a.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: h.len() });
    }
    let op = DiffOperator::linear(h).pow(a.top_degree() as u32);
    if op.is_zero() {
        return Ok(Scalar::zero());
    }
    a.epsilon(&a.class_of(&op)?)
}

fn squarefree(m: usize, face: &[usize]) -> Result<Vec<u32>> {
    let mut mono = vec![0u32; m];
    for &i in face {
        if i >= m {
            return Err(Error::DimensionMismatch { expected: m, found: i + 1 });
        }
        if mono[i] > 0 {
            return Err(Error::Invalid(format!("index {} repeated", i + 1)));
        }
        mono[i] = 1;
    }
    Ok(mono)
}

/// `ε(∂_{i_1} ⋯ ∂_{i_n})` in the Macaulay algebra of `pair`.
pub fn top_product(pair: &CharacteristicPair, subset: &[usize]) -> Result<Scalar> {
    if subset.len() != pair.dim() {
        return Err(Error::DimensionMismatch { expected: pair.dim(), found: subset.len() });
    }
    top_product_in(&cohomology_ring(pair)?, subset)
}

pub fn top_product_in(a: &GradedAlgebra, subset: &[usize]) -> Result<Scalar> {
    if subset.len() != a.top_degree() {
        return Err(Error::DimensionMismatch { expected: a.top_degree(), found: subset.len() });
    }
    a.epsilon(&a.monomial_class(&squarefree(a.nvars(), subset)?)?)
}

/// `ε(∂_I)` for every `n`-subset `I` of the vertices, in lexicographic order.
pub fn top_products(pair: &CharacteristicPair) -> Result<Vec<(Face, Scalar)>> {
    let a = cohomology_ring(pair)?;
    (0..pair.vertex_count())
        .combinations(pair.dim())
        .map(|s| {
            let v = top_product_in(&a, &s)?;
            Ok((s, v))
        })
        .collect()
}

/// The operator `Σ_i ⟨χ, ℓ_i⟩ ∂_i` and what it leaves of the form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelationCheck {
    pub chi: Vector,
    pub operator: DiffOperator,
    /// `operator · Vol`; zero when the relation holds.
    pub residual: MultiPoly,
}

impl LinearRelationCheck {
    pub fn is_ok(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Standard basis of the character lattice `Z^n`.
pub fn character_basis(n: usize) -> Vec<Vector> {
    (0..n).map(|j| crate::exact::scalar::unit(n, j)).collect()
}

pub fn linear_relation_check(pair: &CharacteristicPair, chi: &[Scalar]) -> Result<LinearRelationCheck> {
    linear_relation_check_for(&volume_polynomial(pair)?, pair.lambda(), chi)
}

/// Same check against an arbitrary form, e.g. a perturbed volume polynomial.
pub fn linear_relation_check_for(vol: &MultiPoly, lambda: &[Vector], chi: &[Scalar]) -> Result<LinearRelationCheck> {
    if vol.nvars() != lambda.len() {
        return Err(Error::VariableMismatch { expected: lambda.len(), found: vol.nvars() });
    }
    if let Some(l) = lambda.iter().find(|l| l.len() != chi.len()) {
        return Err(Error::DimensionMismatch { expected: l.len(), found: chi.len() });
    }
    let coeffs: Vector = lambda.iter().map(|l| dot(chi, l)).collect();
    let operator = DiffOperator::linear(&coeffs);
    let residual =
        if coeffs.iter().all(|c| c.is_zero()) { MultiPoly::zero(vol.vars().to_vec()) } else { operator.apply(vol)? };
    Ok(LinearRelationCheck { chi: chi.to_vec(), operator, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::var_names;
    use crate::exact::scalar::{int, ivec, zeros};
    use crate::fixtures;

    #[test]
    fn self_intersection_examples() {
        let p = fixtures::projective_plane();
        assert_eq!(self_intersection(&p, &ivec(&[1, 0, 0])).unwrap(), int(1));
        assert_eq!(self_intersection(&p, &zeros(3)).unwrap(), int(0));
        let q = fixtures::quadrant();
        assert_eq!(self_intersection(&q, &ivec(&[1, 0, 0, 0])).unwrap(), int(0));
        let a = cohomology_ring(&p).unwrap();
        let h = ivec(&[2, -1, 3]);
        assert_eq!(intersection_number(&a, &h).unwrap(), self_intersection(&p, &h).unwrap());
    }

    #[test]
    fn top_product_examples() {
        assert_eq!(top_product(&fixtures::projective_plane(), &[0, 1]).unwrap(), int(1));
        assert_eq!(top_product(&fixtures::quadrant(), &[0, 2]).unwrap(), int(0));
        assert_eq!(top_product(&fixtures::quadrant(), &[0, 1]).unwrap(), int(1));
        assert!(top_product(&fixtures::quadrant(), &[0]).is_err());
    }

    #[test]
    fn linear_relations() {
        let p = fixtures::projective_plane();
        let c = linear_relation_check(&p, &ivec(&[1, 0])).unwrap();
        assert!(c.is_ok());
        assert_eq!(c.operator.to_string(), "d1 - d3");
        assert!(linear_relation_check(&p, &zeros(2)).unwrap().is_ok());
        let bad = MultiPoly::parse("(h1 + h2 + h3)^2/2 + h1^2", var_names("h", 3)).unwrap();
        let c = linear_relation_check_for(&bad, p.lambda(), &ivec(&[1, 0])).unwrap();
        assert!(!c.is_ok());
        assert_eq!(c.residual.to_string(), "2*h1");
    }
}
