//! Exact feasibility of mixed systems of linear equalities, strict and
//! non-strict inequalities.
//!
//! Equalities are eliminated first by parametrizing their solution set.
//! The remaining inequalities go through Fourier–Motzkin elimination with
//! strictness tracking; a witness is rebuilt by back-substitution, always
//! picking a point strictly inside every strict bound.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::matrix::{solve, Matrix, Solution};
use super::scalar::{dot, zeros, Scalar, Vector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

/// One row `coeffs · x (rel) rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vector,
    pub rel: Relation,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    dim: usize,
    rows: Vec<Constraint>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn push(&mut self, coeffs: Vector, rel: Relation, rhs: Scalar) -> Result<()> {
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: coeffs.len() });
        }
        self.rows.push(Constraint { coeffs, rel, rhs });
        Ok(())
    }

    pub fn with(mut self, coeffs: Vector, rel: Relation, rhs: Scalar) -> Result<Self> {
        self.push(coeffs, rel, rhs)?;
        Ok(self)
    }

    /// `a·x = b`
    pub fn eq(self, a: Vector, b: Scalar) -> Result<Self> {
        self.with(a, Relation::Eq, b)
    }

    /// `a·x ≥ b`
    pub fn ge(self, a: Vector, b: Scalar) -> Result<Self> {
        self.with(a, Relation::Ge, b)
    }

    /// `a·x > b`
    pub fn gt(self, a: Vector, b: Scalar) -> Result<Self> {
        self.with(a, Relation::Gt, b)
    }

    /// `a·x ≤ b`
    pub fn le(self, a: Vector, b: Scalar) -> Result<Self> {
        let neg = a.iter().map(|x| -x).collect();
        self.with(neg, Relation::Ge, -b)
    }

    /// `a·x < b`
    pub fn lt(self, a: Vector, b: Scalar) -> Result<Self> {
        let neg = a.iter().map(|x| -x).collect();
        self.with(neg, Relation::Gt, -b)
    }

    pub fn extend(&mut self, other: &LinearSystem) -> Result<()> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        self.rows.extend(other.rows.iter().cloned());
        Ok(())
    }

    pub fn satisfied_by(&self, x: &[Scalar]) -> bool {
        self.rows.iter().all(|r| {
            let v = dot(&r.coeffs, x);
            match r.rel {
                Relation::Eq => v == r.rhs,
                Relation::Ge => v >= r.rhs,
                Relation::Gt => v > r.rhs,
            }
        })
    }

    /// The homogeneous system of recession directions: every inequality
    /// becomes `a·d ≥ 0`, every equality `a·d = 0`.
    pub fn homogeneous(&self) -> LinearSystem {
        let rows = self
            .rows
            .iter()
            .map(|r| Constraint {
                coeffs: r.coeffs.clone(),
                rel: if r.rel == Relation::Eq { Relation::Eq } else { Relation::Ge },
                rhs: Scalar::zero(),
            })
            .collect();
        LinearSystem { dim: self.dim, rows }
    }

    /// Decides feasibility exactly. On success returns a point satisfying
    /// every row (strict rows strictly). An empty system yields the origin.
    pub fn feasible(&self) -> Option<Vector> {
        let eqs: Vec<&Constraint> = self.rows.iter().filter(|r| r.rel == Relation::Eq).collect();
        // x = base + basis · y
        let (base, basis) = if eqs.is_empty() {
            let basis = (0..self.dim).map(|i| super::scalar::unit(self.dim, i)).collect();
            (zeros(self.dim), basis)
        } else {
            let a_rows: Vec<Vector> = eqs.iter().map(|r| r.coeffs.clone()).collect();
            let a = Matrix::from_rows(&a_rows, self.dim).expect("rows share the ambient dimension");
            let b: Vector = eqs.iter().map(|r| r.rhs.clone()).collect();
            match solve(&a, &b).expect("consistent sizes") {
                Solution::Inconsistent => return None,
                Solution::Unique(x) => (x, Vec::new()),
                Solution::Underdetermined { particular, kernel } => (particular, kernel),
            }
        };
        let k = basis.len();
        let mut ineqs = Vec::new();
        for r in self.rows.iter().filter(|r| r.rel != Relation::Eq) {
            let coeffs: Vector = basis.iter().map(|bv| dot(&r.coeffs, bv)).collect();
            let rhs = &r.rhs - dot(&r.coeffs, &base);
            ineqs.push(Ineq { coeffs, rhs, strict: r.rel == Relation::Gt });
        }
        let y = fourier_motzkin(ineqs, k)?;
        let mut x = base;
        for (yi, bv) in y.iter().zip(&basis) {
            for (xj, bj) in x.iter_mut().zip(bv) {
                *xj += yi * bj;
            }
        }
        debug_assert!(self.satisfied_by(&x));
        Some(x)
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible().is_some()
    }
}

#[derive(Debug, Clone)]
struct Ineq {
    coeffs: Vector,
    rhs: Scalar,
    strict: bool,
}

/// Merges rows with proportional coefficient vectors, keeping the tightest.
fn dedupe(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut best: BTreeMap<Vec<Scalar>, (Scalar, bool)> = BTreeMap::new();
    let mut out = Vec::new();
    for r in rows {
        let Some(lead) = r.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            out.push(r);
            continue;
        };
        let key: Vec<Scalar> = r.coeffs.iter().map(|c| c / &lead).collect();
        let rhs = &r.rhs / &lead;
        match best.get_mut(&key) {
            Some((b, s)) => {
                if rhs > *b || (rhs == *b && r.strict) {
                    *b = rhs;
                    *s = r.strict;
                }
            }
            None => {
                best.insert(key, (rhs, r.strict));
            }
        }
    }
    out.extend(best.into_iter().map(|(coeffs, (rhs, strict))| Ineq { coeffs, rhs, strict }));
    out
}

fn fourier_motzkin(rows: Vec<Ineq>, k: usize) -> Option<Vector> {
    // stages[j] holds the system in variables 0..=j before variable j is eliminated.
    let mut stages: Vec<Vec<Ineq>> = vec![Vec::new(); k];
    let mut current = dedupe(rows);
    for j in (0..k).rev() {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in &current {
            if r.coeffs[j].is_positive() {
                lower.push(r);
            } else if r.coeffs[j].is_negative() {
                upper.push(r);
            } else {
                rest.push(r.clone());
            }
        }
        for l in &lower {
            for u in &upper {
                let cl = -&u.coeffs[j];
                let cu = l.coeffs[j].clone();
                let coeffs: Vector = l.coeffs.iter().zip(&u.coeffs).map(|(a, b)| &cl * a + &cu * b).collect();
                rest.push(Ineq { coeffs, rhs: &cl * &l.rhs + &cu * &u.rhs, strict: l.strict || u.strict });
            }
        }
        stages[j] = current;
        current = dedupe(rest);
    }
    for r in &current {
        let ok = if r.strict { r.rhs.is_negative() } else { !r.rhs.is_positive() };
        if !ok {
            return None;
        }
    }
    let mut y = zeros(k);
    for j in 0..k {
        let mut lo: Option<(Scalar, bool)> = None;
        let mut hi: Option<(Scalar, bool)> = None;
        for r in &stages[j] {
            let a = &r.coeffs[j];
            if a.is_zero() {
                continue;
            }
            let partial: Scalar = (0..j).fold(Scalar::zero(), |acc, i| acc + &r.coeffs[i] * &y[i]);
            let bound = (&r.rhs - partial) / a;
            if a.is_positive() {
                let tighter = match &lo {
                    None => true,
                    Some((b, s)) => bound > *b || (bound == *b && r.strict && !s),
                };
                if tighter {
                    lo = Some((bound, r.strict));
                }
            } else {
                let tighter = match &hi {
                    None => true,
                    Some((b, s)) => bound < *b || (bound == *b && r.strict && !s),
                };
                if tighter {
                    hi = Some((bound, r.strict));
                }
            }
        }
        y[j] = match (lo, hi) {
            (None, None) => Scalar::zero(),
            (Some((l, s)), None) => {
                if s {
                    l + Scalar::one()
                } else {
                    l
                }
            }
            (None, Some((h, s))) => {
                if s {
                    h - Scalar::one()
                } else {
                    h
                }
            }
            (Some((l, _)), Some((h, _))) => {
                if l == h {
                    l
                } else {
                    (l + h) / Scalar::from_integer(2.into())
                }
            }
        };
    }
    Some(y)
}
