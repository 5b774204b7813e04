use num_traits::{Signed, Zero};

use super::subordinate::{subordinate_map, winding_number};
use crate::arrangements::{build_arrangement, enumerate_regions, Region};
use crate::complexes::CharacteristicPair;
use crate::error::{Error, Result};
use crate::exact::poly::{total_degree, var_names};
use crate::exact::scalar::{factorial, sub};
use crate::exact::{Matrix, MultiPoly, Scalar, Vector};

/// Bounded regions of the arrangement weighted by their winding numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualChain {
    pub dim: usize,
    pub h: Vector,
    pub regions: Vec<(Region, i64)>,
}

impl VirtualChain {
    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }
}

pub fn virtual_chain(pair: &CharacteristicPair, h: &[Scalar]) -> Result<VirtualChain> {
    let f = subordinate_map(pair, h)?;
    let arrangement = build_arrangement(pair, h)?;
    let mut regions = Vec::new();
    for r in enumerate_regions(&arrangement)? {
        if !r.bounded {
            continue;
        }
        let w = winding_number(&f, &r.witness)?;
        if w != 0 {
            regions.push((r, w));
        }
    }
    Ok(VirtualChain { dim: pair.dim(), h: h.to_vec(), regions })
}

/// `∫_Δ x^α dx` over the simplex with vertices `simplex[0..=n]`.
pub fn integrate_monomial_simplex(alpha: &[u32], simplex: &[Vector]) -> Result<Scalar> {
    let n = alpha.len();
    if simplex.len() != n + 1 || simplex.iter().any(|p| p.len() != n) {
        return Err(Error::DimensionMismatch { expected: n + 1, found: simplex.len() });
    }
    let rows: Vec<Vector> = simplex[1..].iter().map(|p| sub(p, &simplex[0])).collect();
    let jac = if n == 0 { Scalar::from_integer(1.into()) } else { Matrix::square(&rows)?.det()?.abs() };
    if jac.is_zero() {
        return Err(Error::DegenerateSimplex);
    }
    // x_k = Σ_i λ_i w_{i,k} in barycentric coordinates λ_0, …, λ_n.
    let lvars = var_names("l", n + 1);
    let mut integrand = MultiPoly::constant(lvars.clone(), Scalar::from_integer(1.into()));
    for (k, &a) in alpha.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let coeffs: Vector = simplex.iter().map(|p| p[k].clone()).collect();
        integrand = &integrand * &MultiPoly::linear(lvars.clone(), &coeffs).pow(a);
    }
    let mut total = Scalar::zero();
    for (mono, c) in integrand.terms() {
        let num: num_bigint::BigInt = mono.iter().map(|&e| factorial(e)).product();
        let den = factorial(n as u32 + total_degree(mono));
        total += c * Scalar::new(num, den);
    }
    Ok(total * jac)
}

pub fn integrate_over_simplex(q: &MultiPoly, simplex: &[Vector]) -> Result<Scalar> {
    let mut total = Scalar::zero();
    for (mono, c) in q.terms() {
        total += c * integrate_monomial_simplex(mono, simplex)?;
    }
    Ok(total)
}

/// `Σ W(U) ∫_U Q`, using the triangulation stored with each region.
pub fn integrate(q: &MultiPoly, chain: &VirtualChain) -> Result<Scalar> {
    if q.nvars() != chain.dim {
        return Err(Error::VariableMismatch { expected: chain.dim, found: q.nvars() });
    }
    let mut total = Scalar::zero();
    for (region, w) in &chain.regions {
        let mut part = Scalar::zero();
        for s in &region.simplices {
            part += integrate_over_simplex(q, s)?;
        }
        total += part * Scalar::from_integer((*w).into());
    }
    Ok(total)
}

pub fn chain_volume(chain: &VirtualChain) -> Scalar {
    chain
        .regions
        .iter()
        .map(|(r, w)| r.volume.clone().unwrap_or_else(Scalar::zero) * Scalar::from_integer((*w).into()))
        .fold(Scalar::zero(), |a, b| a + b)
}
