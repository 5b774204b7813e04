use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::chain::{integrate, virtual_chain};
use crate::arrangements::AffineSubspace;
use crate::complexes::CharacteristicPair;
use crate::error::{Error, Result};
use crate::exact::poly::{monomials_of_degree, multi_factorial, var_names};
use crate::exact::scalar::{dot, int};
use crate::exact::{polarize, solve, Matrix, Monomial, MultiPoly, Scalar, Vector};

/// Row `j` lists the `j`-th coordinates of `ℓ_1, …, ℓ_m`: the coefficient
/// vectors of the translation operators `Σ_i (ℓ_i)_j ∂_i`.
pub fn translation_operators(pair: &CharacteristicPair) -> Vec<Vector> {
    (0..pair.dim()).map(|j| pair.lambda().iter().map(|l| l[j].clone()).collect()).collect()
}

/// `∂^k Vol` for `|k| = n`, memoized over multi-indices.
pub struct VolumeDerivatives<'a> {
    pair: &'a CharacteristicPair,
    memo: HashMap<Monomial, Scalar>,
}

impl<'a> VolumeDerivatives<'a> {
    pub fn new(pair: &'a CharacteristicPair) -> Self {
        VolumeDerivatives { pair, memo: HashMap::new() }
    }

    pub fn get(&mut self, k: &[u32]) -> Result<Scalar> {
        if k.len() != self.pair.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.pair.vertex_count(), found: k.len() });
        }
        let deg: u32 = k.iter().sum();
        if deg as usize != self.pair.dim() {
            return Ok(Scalar::zero());
        }
        self.derivative(k)
    }

    fn derivative(&mut self, k: &[u32]) -> Result<Scalar> {
        if let Some(v) = self.memo.get(k) {
            return Ok(v.clone());
        }
        let support: Vec<usize> = (0..k.len()).filter(|&i| k[i] > 0).collect();
        let value = if !self.pair.complex().is_face(&support) {
            Scalar::zero()
        } else if let Some(i1) = (0..k.len()).find(|&i| k[i] >= 2) {
            // χ with ⟨χ, ℓ_{i1}⟩ = 1 and ⟨χ, ℓ_j⟩ = 0 on the rest of the support.
            let lambda = self.pair.lambda();
            let mut rows = vec![lambda[i1].clone()];
            let mut rhs = vec![Scalar::one()];
            for &j in support.iter().filter(|&&j| j != i1) {
                rows.push(lambda[j].clone());
                rhs.push(Scalar::zero());
            }
            let a = Matrix::from_rows(&rows, self.pair.dim())?;
            let chi = solve(&a, &rhs)?
                .particular()
                .cloned()
                .ok_or_else(|| Error::Invalid("functionals on a face are dependent".into()))?;
            let mut total = Scalar::zero();
            for l in (0..k.len()).filter(|l| k[*l] == 0) {
                let c = dot(&chi, &lambda[l]);
                if c.is_zero() {
                    continue;
                }
                let mut next = k.to_vec();
                next[i1] -= 1;
                next[l] += 1;
                total -= c * self.derivative(&next)?;
            }
            total
        } else {
            self.pair.facet_weight(&support)?
        };
        self.memo.insert(k.to_vec(), value.clone());
        Ok(value)
    }
}

/// `Vol(h) = Σ_{|k| = n} ∂^k Vol / k! · h^k` in variables `h1, …, hm`.
pub fn volume_polynomial(pair: &CharacteristicPair) -> Result<MultiPoly> {
    let m = pair.vertex_count();
    let mut d = VolumeDerivatives::new(pair);
    let mut terms = Vec::new();
    for k in monomials_of_degree(m, pair.dim() as u32) {
        let v = d.get(&k)?;
        if !v.is_zero() {
            let c = v / Scalar::from_integer(multi_factorial(&k));
            terms.push((k, c));
        }
    }
    Ok(MultiPoly::from_terms(var_names("h", m), terms))
}

/// Mixed volume: the symmetric multilinear form whose diagonal is `Vol`.
pub fn mixed_volume(pair: &CharacteristicPair, hs: &[Vector]) -> Result<Scalar> {
    if hs.len() != pair.dim() {
        return Err(Error::DimensionMismatch { expected: pair.dim(), found: hs.len() });
    }
    polarize(&volume_polynomial(pair)?, hs)
}

/// `I_Q(h) = ∫_{Δ(h)} Q`.
pub fn integral_value(pair: &CharacteristicPair, q: &MultiPoly, h: &[Scalar]) -> Result<Scalar> {
    integrate(q, &virtual_chain(pair, h)?)
}

/// Weights `w_j` with `f^{(k)}(0) = Σ_j w_j f(j)` for polynomials of degree
/// at most `nodes - 1`, from the Lagrange basis on `0, 1, …, nodes - 1`.
pub fn lagrange_derivative_weights(nodes: usize, k: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(nodes);
    for j in 0..nodes {
        // Coefficients of Π_{l≠j} (t - l) / (j - l), lowest degree first.
        let mut coeffs = vec![Scalar::one()];
        for l in (0..nodes).filter(|&l| l != j) {
            let denom = int(j as i64 - l as i64);
            let mut next = vec![Scalar::zero(); coeffs.len() + 1];
            for (d, c) in coeffs.iter().enumerate() {
                next[d + 1] += c / &denom;
                next[d] -= c * int(l as i64) / &denom;
            }
            coeffs = next;
        }
        let c = coeffs.get(k).cloned().unwrap_or_else(Scalar::zero);
        out.push(c * Scalar::from_integer(crate::exact::scalar::factorial(k as u32)));
    }
    out
}

/// `∂^k I_Q` at `h`. Non-face supports give 0 and squarefree facets of
/// size `n` give `sign(I) · Q(A) / |det ℓ_I|` with `A` the vertex `H_I`; every
/// other multi-index is computed by exact finite differences of `I_Q`,
/// a polynomial of degree at most `n + deg Q` in `h`.
pub fn derivative_value(pair: &CharacteristicPair, q: &MultiPoly, k: &[u32], h: &[Scalar]) -> Result<Scalar> {
    let m = pair.vertex_count();
    let n = pair.dim();
    if k.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: k.len() });
    }
    if h.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: h.len() });
    }
    if q.nvars() != n {
        return Err(Error::VariableMismatch { expected: n, found: q.nvars() });
    }
    let support: Vec<usize> = (0..m).filter(|&i| k[i] > 0).collect();
    if !pair.complex().is_face(&support) {
        return Ok(Scalar::zero());
    }
    let order: u32 = k.iter().sum();
    if order as usize == n && k.iter().all(|&e| e <= 1) {
        let eqs = support.iter().map(|&i| (pair.lambda()[i].clone(), h[i].clone())).collect();
        let vertex = AffineSubspace::from_equations(n, eqs)?.ok_or(Error::EmptySet)?;
        return Ok(pair.facet_weight(&support)? * q.eval(vertex.point())?);
    }
    finite_difference(pair, q, k, h)
}

/// The finite-difference route alone, usable as a check on the closed form.
pub fn finite_difference(pair: &CharacteristicPair, q: &MultiPoly, k: &[u32], h: &[Scalar]) -> Result<Scalar> {
    let n = pair.dim();
    let Some(degree) = q.degree() else { return Ok(Scalar::zero()) };
    let bound = n + degree as usize;
    let order: u32 = k.iter().sum();
    if order as usize > bound {
        return Ok(Scalar::zero());
    }
    let support: Vec<usize> = (0..k.len()).filter(|&i| k[i] > 0).collect();
    let weights: Vec<Vec<Scalar>> =
        support.iter().map(|&i| lagrange_derivative_weights(bound + 1, k[i] as usize)).collect();
    let mut total = Scalar::zero();
    for grid in support.iter().map(|_| 0..=bound).multi_cartesian_product() {
        let w: Scalar = grid.iter().zip(&weights).map(|(&g, ws)| ws[g].clone()).product();
        if w.is_zero() {
            continue;
        }
        let mut hp = h.to_vec();
        for (&i, &g) in support.iter().zip(&grid) {
            hp[i] += int(g as i64);
        }
        total += w * integral_value(pair, q, &hp)?;
    }
    if support.is_empty() {
        total = integral_value(pair, q, h)?;
    }
    Ok(total)
}
