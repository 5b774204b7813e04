use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::var_names;
use crate::exact::{monomials_of_degree, Matrix, Monomial, MultiPoly, Scalar};

/// A differential operator with constant coefficients, stored as a
/// polynomial in the formal symbols `d1, …, dm` standing for `∂/∂h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOperator {
    poly: MultiPoly,
}

impl DiffOperator {
    pub fn new(poly: MultiPoly) -> Self {
        let m = poly.nvars();
        DiffOperator { poly: poly.with_vars(var_names("d", m)) }
    }

    pub fn zero(m: usize) -> Self {
        DiffOperator { poly: MultiPoly::zero(var_names("d", m)) }
    }

    pub fn identity(m: usize) -> Self {
        DiffOperator { poly: MultiPoly::constant(var_names("d", m), Scalar::from_integer(1.into())) }
    }

    /// `∂_i`, 0-based.
    pub fn partial(m: usize, i: usize) -> Self {
        DiffOperator { poly: MultiPoly::var(var_names("d", m), i) }
    }

    /// `∂^α`.
    pub fn monomial(alpha: &[u32]) -> Self {
        let one = Scalar::from_integer(1.into());
        DiffOperator { poly: MultiPoly::from_terms(var_names("d", alpha.len()), [(alpha.to_vec(), one)]) }
    }

    /// `Σ c_i ∂_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        DiffOperator { poly: MultiPoly::linear(var_names("d", coeffs.len()), coeffs) }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        DiffOperator { poly: self.poly.pow(e) }
    }

    /// Applies the operator to `p` by iterated partial differentiation.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.nvars() != self.nvars() {
            return Err(Error::VariableMismatch { expected: self.nvars(), found: p.nvars() });
        }
        let mut out = MultiPoly::zero(p.vars().to_vec());
        for (alpha, c) in self.poly.terms() {
            out = &out + &p.derivative_multi(alpha).scale(c);
        }
        Ok(out)
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl Add for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        DiffOperator { poly: &self.poly + &rhs.poly }
    }
}

impl Sub for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        DiffOperator { poly: &self.poly - &rhs.poly }
    }
}

impl Mul for &DiffOperator {
    type Output = DiffOperator;
    fn mul(self, rhs: &DiffOperator) -> DiffOperator {
        DiffOperator { poly: &self.poly * &rhs.poly }
    }
}

/// Degree of a form, with the zero polynomial counted as degree 0.
pub(crate) fn form_degree(vol: &MultiPoly) -> Result<u32> {
    if vol.is_zero() {
        return Ok(0);
    }
    vol.homogeneous_degree().ok_or(Error::NonHomogeneous)
}

/// Columns are the coefficient vectors of `∂^α vol` over the monomials of
/// degree `deg vol - d`, one column per `α` in `monos`.
pub(crate) fn evaluation_matrix(vol: &MultiPoly, monos: &[Monomial], d: u32) -> Result<Matrix> {
    let n = form_degree(vol)?;
    let targets = if d <= n { monomials_of_degree(vol.nvars(), n - d) } else { Vec::new() };
    let cols: Vec<Vec<Scalar>> = monos
        .iter()
        .map(|alpha| {
            let image = vol.derivative_multi(alpha);
            targets.iter().map(|t| image.coeff(t)).collect()
        })
        .collect();
    if cols.is_empty() {
        return Ok(Matrix::zeros(targets.len(), 0));
    }
    Matrix::from_columns(&cols, targets.len())
}

/// The degree-`d` part of `Ann(vol)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub degree: u32,
    /// Operator monomials of degree `d`, in graded-lex order.
    pub monomials: Vec<Monomial>,
    /// Exact basis of the kernel, each scaled so its first nonzero
    /// coefficient is positive.
    pub basis: Vec<DiffOperator>,
    /// `dim A_d`, the rank of the evaluation map.
    pub quotient_dim: usize,
}

impl Annihilator {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn annihilator(vol: &MultiPoly, d: u32) -> Result<Annihilator> {
    let m = vol.nvars();
    let monos = monomials_of_degree(m, d);
    let matrix = evaluation_matrix(vol, &monos, d)?;
    let quotient_dim = if matrix.nrows() == 0 { 0 } else { matrix.rank() };
    let kernel = if matrix.nrows() == 0 {
        (0..monos.len()).map(|j| crate::exact::scalar::unit(monos.len(), j)).collect()
    } else {
        matrix.kernel()
    };
    let basis = kernel
        .into_iter()
        .map(|mut v| {
            if v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
                v.iter_mut().for_each(|c| *c = -c.clone());
            }
            let terms = monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero());
            DiffOperator { poly: MultiPoly::from_terms(var_names("d", m), terms) }
        })
        .collect();
    Ok(Annihilator { degree: d, monomials: monos, basis, quotient_dim })
}
