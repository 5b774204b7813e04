use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{dot, zeros, Scalar, Vector};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of solving `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vector),
    Inconsistent,
    /// `x = particular + span(kernel)`.
    Underdetermined {
        particular: Vector,
        kernel: Vec<Vector>,
    },
}

impl Solution {
    pub fn particular(&self) -> Option<&Vector> {
        match self {
            Solution::Unique(x) => Some(x),
            Solution::Underdetermined { particular, .. } => Some(particular),
            Solution::Inconsistent => None,
        }
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from rows. An empty row list gives a `0 x cols` matrix.
    pub fn from_rows(rows: &[Vector], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Square matrix from rows; the column count is taken from the row count.
    pub fn square(rows: &[Vector]) -> Result<Self> {
        Self::from_rows(rows, rows.len())
    }

    pub fn from_columns(cols: &[Vector], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(cols, rows)?.transpose())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Vector {
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Exact determinant. Rows are scaled to integers and the Bareiss
    /// fraction-free elimination runs over `BigInt`.
    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            m.push(self.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
            scale *= l;
        }
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Scalar::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = Scalar::new(m[n - 1][n - 1].clone(), scale);
        Ok(if negate { -d } else { d })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &f * &m[(r, j)];
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zeros(self.cols);
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(Some(inv))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Solves `A x = b` exactly.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Solution> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    let mut x = zeros(n);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    if pivots.len() == n {
        return Ok(Solution::Unique(x));
    }
    Ok(Solution::Underdetermined { particular: x, kernel: a.kernel() })
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
