use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::scalar::{dot, is_zero_vec, sub, unit, zeros};
use crate::exact::{rank_of, solve, Matrix, Scalar, Solution, Vector};

/// A nonempty affine subspace of `Q^n`, kept both as a system of
/// equations and as a point plus a basis of its direction space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSubspace {
    ambient: usize,
    equations: Vec<(Vector, Scalar)>,
    point: Vector,
    directions: Vec<Vector>,
}

impl AffineSubspace {
    pub fn ambient(n: usize) -> Self {
        AffineSubspace {
            ambient: n,
            equations: Vec::new(),
            point: zeros(n),
            directions: (0..n).map(|i| unit(n, i)).collect(),
        }
    }

    /// The hyperplane `form · x = rhs`; the form is stored unchanged.
    pub fn hyperplane(form: Vector, rhs: Scalar) -> Result<Self> {
        if is_zero_vec(&form) {
            return Err(Error::ZeroForm);
        }
        let n = form.len();
        let mut sub = Self::from_equations(n, vec![(form.clone(), rhs.clone())])?.expect("nonzero form is consistent");
        sub.equations = vec![(form, rhs)];
        Ok(sub)
    }

    /// Solution set of the equations, or `None` when it is empty.
    pub fn from_equations(n: usize, equations: Vec<(Vector, Scalar)>) -> Result<Option<Self>> {
        if equations.is_empty() {
            return Ok(Some(Self::ambient(n)));
        }
        let rows: Vec<Vector> = equations.iter().map(|(a, _)| a.clone()).collect();
        let a = Matrix::from_rows(&rows, n)?;
        let b: Vector = equations.iter().map(|(_, c)| c.clone()).collect();
        let (point, directions) = match solve(&a, &b)? {
            Solution::Inconsistent => return Ok(None),
            Solution::Unique(x) => (x, Vec::new()),
            Solution::Underdetermined { particular, kernel } => (particular, kernel),
        };
        let mut aug = Matrix::zeros(equations.len(), n + 1);
        for (i, (row, rhs)) in equations.iter().enumerate() {
            for j in 0..n {
                aug[(i, j)] = row[j].clone();
            }
            aug[(i, n)] = rhs.clone();
        }
        let (r, pivots) = aug.rref();
        let reduced = (0..pivots.len()).map(|i| (r.row(i)[..n].to_vec(), r[(i, n)].clone())).collect();
        Ok(Some(AffineSubspace { ambient: n, equations: reduced, point, directions }))
    }

    /// Affine hull of a nonempty list of points.
    pub fn from_points(points: &[Vector]) -> Result<Self> {
        let p0 = points.first().ok_or(Error::EmptySet)?.clone();
        let n = p0.len();
        let diffs: Vec<Vector> = points[1..].iter().map(|p| sub(p, &p0)).collect();
        let directions = if diffs.is_empty() {
            Vec::new()
        } else {
            let (r, pivots) = Matrix::from_rows(&diffs, n)?.rref();
            (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
        };
        let normals = if directions.is_empty() {
            (0..n).map(|i| unit(n, i)).collect()
        } else {
            Matrix::from_rows(&directions, n)?.kernel()
        };
        let equations = normals.into_iter().map(|v| {
            let c = dot(&v, &p0);
            (v, c)
        });
        Ok(AffineSubspace { ambient: n, equations: equations.collect(), point: p0, directions })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    pub fn equations(&self) -> &[(Vector, Scalar)] {
        &self.equations
    }

    pub fn point(&self) -> &Vector {
        &self.point
    }

    pub fn directions(&self) -> &[Vector] {
        &self.directions
    }

    pub fn is_hyperplane(&self) -> bool {
        self.ambient > 0 && self.dimension() + 1 == self.ambient
    }

    /// Defining form of a hyperplane.
    pub fn form(&self) -> Option<(Vector, Scalar)> {
        if self.is_hyperplane() {
            self.equations.first().cloned()
        } else {
            None
        }
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.equations.iter().all(|(a, b)| &dot(a, x) == b)
    }

    /// Whether the direction `d` is parallel to the subspace.
    pub fn contains_direction(&self, d: &[Scalar]) -> bool {
        self.equations.iter().all(|(a, _)| dot(a, d).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_subspace(&self, other: &AffineSubspace) -> bool {
        self.contains(&other.point) && other.directions.iter().all(|d| self.contains_direction(d))
    }

    pub fn same_set(&self, other: &AffineSubspace) -> bool {
        self.contains_subspace(other) && other.contains_subspace(self)
    }

    pub fn intersect(&self, other: &AffineSubspace) -> Result<Option<AffineSubspace>> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let eqs = self.equations.iter().chain(&other.equations).cloned().collect();
        Self::from_equations(self.ambient, eqs)
    }

    /// Point of minimal Euclidean norm, `Aᵀ(AAᵀ)⁻¹b` for independent rows.
    pub fn nearest_to_origin(&self) -> Vector {
        if self.equations.is_empty() {
            return zeros(self.ambient);
        }
        let rows: Vec<Vector> = self.equations.iter().map(|(a, _)| a.clone()).collect();
        let a = Matrix::from_rows(&rows, self.ambient).expect("rows share the ambient dimension");
        let gram = a.mul(&a.transpose()).expect("compatible shapes");
        let b: Vector = self.equations.iter().map(|(_, c)| c.clone()).collect();
        let y = solve(&gram, &b).expect("square system");
        let y = y.particular().expect("Gram matrix of a consistent system").clone();
        a.transpose().mul_vec(&y)
    }

    /// Checks that the two stored descriptions describe the same set.
    pub fn representations_agree(&self) -> bool {
        let rows: Vec<Vector> = self.equations.iter().map(|(a, _)| a.clone()).collect();
        self.contains(&self.point)
            && self.directions.iter().all(|d| self.contains_direction(d))
            && rank_of(&self.directions, self.ambient) == self.directions.len()
            && rank_of(&rows, self.ambient) + self.directions.len() == self.ambient
    }
}
