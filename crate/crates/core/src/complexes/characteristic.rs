use num_traits::{One, Signed};

use super::{Face, Fan, Issue, OrientedSphere, Report, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::scalar::{is_integer_vec, sign};
use crate::exact::{det_rows, rank_of, Matrix, Scalar, Vector};

/// Whether the characteristic map must be integral and unimodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Integer,
    Real,
}

/// Checks that `lambda` assigns one functional in `R^dim` to every vertex
/// and is independent on every facet; in integer mode also integrality and
/// unimodularity.
pub fn validate_characteristic(complex: &SimplicialComplex, dim: usize, lambda: &[Vector], mode: Mode) -> Report {
    let mut report = Report::default();
    if lambda.len() != complex.vertex_count() {
        report.issues.push(Issue::LambdaCount { expected: complex.vertex_count(), found: lambda.len() });
        return report;
    }
    for (i, l) in lambda.iter().enumerate() {
        if l.len() != dim {
            report.issues.push(Issue::LambdaDimension { vertex: i, expected: dim });
        } else if mode == Mode::Integer && !is_integer_vec(l) {
            report.issues.push(Issue::NonIntegerFunctional(i));
        }
    }
    if !report.is_ok() {
        return report;
    }
    for f in complex.facets() {
        let rows: Vec<Vector> = f.iter().map(|&i| lambda[i].clone()).collect();
        if rank_of(&rows, dim) != f.len() {
            report.issues.push(Issue::DependentFunctionals(f.clone()));
            continue;
        }
        if mode == Mode::Integer && f.len() == dim {
            let d = det_rows(&rows).expect("square");
            if d.abs() != Scalar::one() {
                report.issues.push(Issue::NotUnimodular { facet: f.clone(), det: d.to_string() });
            }
        }
    }
    report
}

/// An oriented sphere together with a characteristic map `λ` and,
/// when it comes from geometry, the fan it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPair {
    sphere: OrientedSphere,
    lambda: Vec<Vector>,
    dim: usize,
    mode: Mode,
    fan: Option<Fan>,
}

impl CharacteristicPair {
    pub fn new(sphere: OrientedSphere, lambda: Vec<Vector>, mode: Mode) -> Result<Self> {
        let dim = sphere.dim();
        let report = validate_characteristic(sphere.complex(), dim, &lambda, mode);
        if !report.is_ok() {
            return Err(Error::Invalid(report.to_string()));
        }
        Ok(CharacteristicPair { sphere, lambda, dim, mode, fan: None })
    }

    /// Pair from a complete fan, oriented by its ray determinants. Without
    /// an explicit `lambda` the rays themselves are used.
    pub fn from_fan(fan: Fan, lambda: Option<Vec<Vector>>, mode: Mode) -> Result<Self> {
        let report = fan.validate();
        if !report.is_ok() {
            return Err(Error::Invalid(report.to_string()));
        }
        let sphere = fan.orientation()?;
        let lambda = lambda.unwrap_or_else(|| fan.rays().to_vec());
        let mut pair = Self::new(sphere, lambda, mode)?;
        pair.fan = Some(fan);
        Ok(pair)
    }

    pub fn sphere(&self) -> &OrientedSphere {
        &self.sphere
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.sphere.complex()
    }

    pub fn fan(&self) -> Option<&Fan> {
        self.fan.as_ref()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Vector] {
        &self.lambda
    }

    pub fn facets(&self) -> &[Face] {
        self.sphere.facets()
    }

    /// The `n x m` matrix with columns `ℓ_1, …, ℓ_m`.
    pub fn lambda_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.lambda, self.dim).expect("lengths validated")
    }

    /// `ε_F · det(ℓ_i : i ∈ F)` with `F` in increasing order.
    pub fn facet_determinant(&self, facet: &[usize]) -> Result<Scalar> {
        let eps = self.sphere.sign(facet)?;
        let rows: Vec<Vector> = facet.iter().map(|&i| self.lambda[i].clone()).collect();
        let d = det_rows(&rows)?;
        Ok(if eps > 0 { d } else { -d })
    }

    /// `∂_F Vol = sign(F) / |det ℓ_F|`: the edge vectors at the vertex `H_F`
    /// form the basis dual to `ℓ_F`, so the unit box they span has volume
    /// `1 / |det ℓ_F|`. Equal to `±1` in integer mode.
    pub fn facet_weight(&self, facet: &[usize]) -> Result<Scalar> {
        Ok(Scalar::one() / self.facet_determinant(facet)?)
    }

    /// Sign of the facet determinant.
    pub fn sign_of(&self, facet: &[usize]) -> Result<i8> {
        Ok(sign(&self.facet_determinant(facet)?))
    }

    pub fn flipped(&self) -> Self {
        CharacteristicPair { sphere: self.sphere.flipped(), ..self.clone() }
    }
}
