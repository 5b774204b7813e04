use std::collections::HashMap;

use num_traits::Zero;

use super::operator::{evaluation_matrix, form_degree, DiffOperator};
use crate::error::{Error, Result};
use crate::exact::poly::{monomial_key, total_degree, var_names};
use crate::exact::scalar::zeros;
use crate::exact::{monomials_of_degree, solve, Matrix, Monomial, MultiPoly, Scalar, Vector};

/// One graded component `A_d`, presented as the image of a linear map from
/// the span of `monomials` into a coordinate space. The kernel of the map is
/// the degree-`d` part of the ideal; monomials not listed are zero in `A_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiece {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    /// Column `k` is the image of `monomials[k]`.
    pub images: Matrix,
    /// Indices of the monomials chosen as coset representatives.
    pub basis: Vec<usize>,
    index: HashMap<Monomial, usize>,
    reduce: Matrix,
}

impl GradedPiece {
    fn new(degree: usize, monomials: Vec<Monomial>, images: Matrix) -> Result<Self> {
        if images.ncols() != monomials.len() {
            return Err(Error::DimensionMismatch { expected: monomials.len(), found: images.ncols() });
        }
        if let Some(bad) = monomials.iter().find(|m| total_degree(m) as usize != degree) {
            return Err(Error::Invalid(format!("monomial {bad:?} does not have degree {degree}")));
        }
        let basis = if images.nrows() == 0 { Vec::new() } else { images.rref().1 };
        let cols: Vec<Vector> = basis.iter().map(|&j| images.column(j)).collect();
        let reduce = if cols.is_empty() {
            Matrix::zeros(images.nrows(), 0)
        } else {
            Matrix::from_columns(&cols, images.nrows())?
        };
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(GradedPiece { degree, monomials, images, basis, index, reduce })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_monomials(&self) -> Vec<&Monomial> {
        self.basis.iter().map(|&j| &self.monomials[j]).collect()
    }

    fn image_of(&self, mono: &[u32]) -> Vector {
        match self.index.get(mono) {
            Some(&k) => self.images.column(k),
            None => zeros(self.images.nrows()),
        }
    }

    fn coordinates(&self, image: &[Scalar]) -> Result<Vector> {
        if self.basis.is_empty() {
            return Ok(Vec::new());
        }
        let sol = solve(&self.reduce, image)?;
        sol.particular().cloned().ok_or_else(|| Error::Invalid(format!("image is outside A_{}", self.degree)))
    }
}

/// An element of `A_d` in coordinates relative to the coset representatives.
/// Classes above the top degree are zero with empty coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class {
    pub degree: usize,
    pub coords: Vector,
}

impl Class {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// A graded commutative algebra `A_0 ⊕ … ⊕ A_n` generated in degree 1 by
/// the symbols `d1, …, dm`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    nvars: usize,
    pieces: Vec<GradedPiece>,
}

impl GradedAlgebra {
    /// Assembles an algebra from per-degree `(monomials, images)` pairs for
    /// degrees `0, 1, …, top`.
    pub fn from_images(nvars: usize, pieces: Vec<(Vec<Monomial>, Matrix)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::Invalid("an algebra needs at least degree 0".into()));
        }
        let pieces = pieces
            .into_iter()
            .enumerate()
            .map(|(d, (monos, images))| {
                if let Some(bad) = monos.iter().find(|m| m.len() != nvars) {
                    return Err(Error::DimensionMismatch { expected: nvars, found: bad.len() });
                }
                GradedPiece::new(d, monos, images)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedAlgebra { nvars, pieces })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn top_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn piece(&self, d: usize) -> Option<&GradedPiece> {
        self.pieces.get(d)
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces.get(d).map_or(0, GradedPiece::dim)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(GradedPiece::dim).collect()
    }

    /// Coset representatives of `A_d`.
    pub fn basis(&self, d: usize) -> Vec<&Monomial> {
        self.pieces.get(d).map_or_else(Vec::new, GradedPiece::basis_monomials)
    }

    /// Renders a monomial in the generator symbols, e.g. `d1^2d3`.
    pub fn monomial_name(&self, mono: &[u32]) -> String {
        monomial_key(mono, &var_names("d", self.nvars))
    }

    pub fn zero_class(&self, d: usize) -> Class {
        Class { degree: d, coords: zeros(self.dim(d)) }
    }

    pub fn basis_class(&self, d: usize, i: usize) -> Class {
        let mut c = self.zero_class(d);
        c.coords[i] = Scalar::from_integer(1.into());
        c
    }

    pub fn monomial_class(&self, mono: &[u32]) -> Result<Class> {
        if mono.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: mono.len() });
        }
        let d = total_degree(mono) as usize;
        match self.pieces.get(d) {
            None => Ok(self.zero_class(d)),
            Some(p) => Ok(Class { degree: d, coords: p.coordinates(&p.image_of(mono))? }),
        }
    }

    /// Class of a homogeneous operator; the zero operator maps to 0 in degree 0.
    pub fn class_of(&self, op: &DiffOperator) -> Result<Class> {
        if op.nvars() != self.nvars {
            return Err(Error::VariableMismatch { expected: self.nvars, found: op.nvars() });
        }
        let d = form_degree(op.poly())? as usize;
        let Some(p) = self.pieces.get(d) else { return Ok(self.zero_class(d)) };
        let mut image = zeros(p.images.nrows());
        for (mono, c) in op.poly().terms() {
            for (acc, v) in image.iter_mut().zip(p.image_of(mono)) {
                *acc += c * v;
            }
        }
        Ok(Class { degree: d, coords: p.coordinates(&image)? })
    }

    /// Product of two classes: multiply representatives, then reduce.
    pub fn multiply(&self, a: &Class, b: &Class) -> Result<Class> {
        let d = a.degree + b.degree;
        let Some(p) = self.pieces.get(d) else { return Ok(self.zero_class(d)) };
        let ba = self.basis(a.degree);
        let bb = self.basis(b.degree);
        let mut image = zeros(p.images.nrows());
        for (x, ma) in a.coords.iter().zip(&ba) {
            if x.is_zero() {
                continue;
            }
            for (y, mb) in b.coords.iter().zip(&bb) {
                if y.is_zero() {
                    continue;
                }
                let prod: Monomial = ma.iter().zip(mb.iter()).map(|(u, v)| u + v).collect();
                let xy = x * y;
                for (acc, v) in image.iter_mut().zip(p.image_of(&prod)) {
                    *acc += &xy * v;
                }
            }
        }
        Ok(Class { degree: d, coords: p.coordinates(&image)? })
    }

    /// The top-degree functional: the first image coordinate of a class in
    /// `A_n`. Requires `dim A_n = 1` with a one-dimensional image space.
    pub fn epsilon(&self, c: &Class) -> Result<Scalar> {
        let top = self.top_degree();
        if c.degree != top {
            return Err(Error::Invalid(format!("epsilon is defined on degree {top}, got {}", c.degree)));
        }
        let p = &self.pieces[top];
        if p.dim() != 1 || p.images.nrows() != 1 {
            return Err(Error::Invalid(format!("top degree has dimension {}", p.dim())));
        }
        Ok(&c.coords[0] * &p.images.row(0)[p.basis[0]])
    }

    /// `P[i][j] = ε(b_i · b'_j)` for bases of `A_d` and `A_{n-d}`.
    pub fn pairing_matrix(&self, d: usize) -> Result<Matrix> {
        let top = self.top_degree();
        if d > top {
            return Err(Error::Invalid(format!("degree {d} exceeds {top}")));
        }
        let (r, s) = (self.dim(d), self.dim(top - d));
        let mut rows = Vec::with_capacity(r);
        for i in 0..r {
            let mut row = Vec::with_capacity(s);
            for j in 0..s {
                let prod = self.multiply(&self.basis_class(d, i), &self.basis_class(top - d, j))?;
                row.push(self.epsilon(&prod)?);
            }
            rows.push(row);
        }
        Matrix::from_rows(&rows, s)
    }

    /// `c[i][j]` is the coordinate vector of `b_i · b'_j` in `A_{d1 + d2}`.
    pub fn structure_constants(&self, d1: usize, d2: usize) -> Result<Vec<Vec<Vector>>> {
        (0..self.dim(d1))
            .map(|i| {
                (0..self.dim(d2))
                    .map(|j| Ok(self.multiply(&self.basis_class(d1, i), &self.basis_class(d2, j))?.coords))
                    .collect()
            })
            .collect()
    }

    /// Whether every structure constant and the value of `ε` on the top
    /// basis class are integers.
    pub fn is_integral(&self) -> Result<bool> {
        let top = self.top_degree();
        for d1 in 0..=top {
            for d2 in d1..=top - d1 {
                let consts = self.structure_constants(d1, d2)?;
                if consts.iter().flatten().flatten().any(|c| !c.is_integer()) {
                    return Ok(false);
                }
            }
        }
        if self.dim(top) == 1 {
            return Ok(self.epsilon(&self.basis_class(top, 0))?.is_integer());
        }
        Ok(true)
    }
}

/// `Diff / Ann(vol)` for a nonzero homogeneous form `vol`; `ε(D) = D·vol`.
pub fn macaulay_algebra(vol: &MultiPoly) -> Result<GradedAlgebra> {
    if vol.is_zero() {
        return Err(Error::Invalid("the form is zero".into()));
    }
    let n = form_degree(vol)?;
    let m = vol.nvars();
    let pieces = (0..=n)
        .map(|d| {
            let monos = monomials_of_degree(m, d);
            let images = evaluation_matrix(vol, &monos, d)?;
            Ok((monos, images))
        })
        .collect::<Result<Vec<_>>>()?;
    GradedAlgebra::from_images(m, pieces)
}

/// Even Betti numbers `b_0, b_2, …, b_{2n}`; the odd ones vanish.
pub fn betti(a: &GradedAlgebra) -> Vec<usize> {
    a.dims()
}

/// Outcome of the Poincaré duality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub dims: Vec<usize>,
    /// Rank of the pairing `A_d × A_{n-d} → A_n` for each `d`, when defined.
    pub pairing_ranks: Vec<Option<usize>>,
    pub issues: Vec<String>,
}

impl DualityReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

pub fn poincare_check(a: &GradedAlgebra) -> DualityReport {
    let dims = a.dims();
    let top = a.top_degree();
    let mut issues = Vec::new();
    if dims[0] != 1 {
        issues.push(format!("dim A_0 = {}", dims[0]));
    }
    if dims[top] != 1 {
        issues.push(format!("dim A_{top} = {}", dims[top]));
    }
    for d in 0..=top / 2 {
        if dims[d] != dims[top - d] {
            issues.push(format!("dim A_{d} = {} but dim A_{} = {}", dims[d], top - d, dims[top - d]));
        }
    }
    let mut pairing_ranks = vec![None; top + 1];
    if dims[top] == 1 {
        for (d, slot) in pairing_ranks.iter_mut().enumerate() {
            match a.pairing_matrix(d) {
                Ok(p) => {
                    let rank = if p.nrows() == 0 || p.ncols() == 0 { 0 } else { p.rank() };
                    if rank != dims[d] || rank != dims[top - d] {
                        issues.push(format!(
                            "pairing A_{d} x A_{} has rank {rank} on dimensions {} x {}",
                            top - d,
                            dims[d],
                            dims[top - d]
                        ));
                    }
                    *slot = Some(rank);
                }
                Err(e) => issues.push(format!("pairing in degree {d}: {e}")),
            }
        }
    }
    DualityReport { dims, pairing_ranks, issues }
}
