//! Exact rational arithmetic, linear algebra, feasibility of linear systems
//! and sparse multivariate polynomials.

pub mod feasibility;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use feasibility::{Constraint, LinearSystem, Relation};
pub use matrix::{solve, Matrix, Solution};
pub use poly::{monomial_key, monomials_of_degree, polarize, var_names, Monomial, MultiPoly};
pub use scalar::{Scalar, Vector};

/// Determinant of the square matrix whose rows are `rows`.
pub fn det_rows(rows: &[Vector]) -> crate::Result<Scalar> {
    Matrix::square(rows)?.det()
}

/// Rank of a family of vectors of length `dim`.
pub fn rank_of(rows: &[Vector], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows, dim).map(|m| m.rank()).unwrap_or(0)
}
