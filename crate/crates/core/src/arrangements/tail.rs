use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::scalar::{dot, fmt_vec, int, primitive, scale, sub};
use crate::exact::{rank_of, LinearSystem, Matrix, Relation, Scalar, Vector};

/// Recession cone `{d : a + t d ∈ U for all a ∈ U, t ≥ 0}` of a convex set
/// given by a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCone {
    /// Closed homogeneous system describing the cone.
    pub system: LinearSystem,
    /// Basis of the largest linear subspace inside the cone.
    pub lineality: Vec<Vector>,
    /// Extreme rays of the cone modulo its lineality space.
    pub generators: Vec<Vector>,
    pub is_vector_space: bool,
}

impl TailCone {
    pub fn is_zero(&self) -> bool {
        self.lineality.is_empty() && self.generators.is_empty()
    }

    pub fn contains(&self, d: &[Scalar]) -> bool {
        self.system.satisfied_by(d)
    }
}

pub fn tail_cone(sys: &LinearSystem) -> Result<TailCone> {
    if !sys.is_feasible() {
        return Err(Error::EmptySet);
    }
    let n = sys.dim();
    let system = sys.homogeneous();
    let all_rows: Vec<Vector> = system.rows().iter().map(|r| r.coeffs.clone()).collect();
    let lineality = if all_rows.is_empty() {
        (0..n).map(|i| crate::exact::scalar::unit(n, i)).collect()
    } else {
        Matrix::from_rows(&all_rows, n)?.kernel()
    };

    // Pointed part: the cone intersected with the orthogonal complement of
    // its lineality space.
    let mut equalities: Vec<Vector> =
        system.rows().iter().filter(|r| r.rel == Relation::Eq).map(|r| r.coeffs.clone()).collect();
    equalities.extend(lineality.iter().cloned());
    let inequalities: Vec<Vector> =
        system.rows().iter().filter(|r| r.rel != Relation::Eq).map(|r| r.coeffs.clone()).collect();
    let mut generators = BTreeSet::new();
    let base_rank = rank_of(&equalities, n);
    if base_rank < n {
        let need = n - 1 - base_rank;
        for subset in inequalities.iter().combinations(need) {
            let mut rows = equalities.clone();
            rows.extend(subset.into_iter().cloned());
            if rank_of(&rows, n) != n - 1 {
                continue;
            }
            let ker = Matrix::from_rows(&rows, n)?.kernel();
            let d = &ker[0];
            for s in [1i64, -1] {
                let cand = scale(d, &int(s));
                if system.satisfied_by(&cand) {
                    generators.insert(primitive(&cand));
                }
            }
        }
    }
    let generators: Vec<Vector> = generators.into_iter().collect();
    let is_vector_space = generators.iter().all(|g| system.satisfied_by(&scale(g, &int(-1))));
    Ok(TailCone { system, lineality, generators, is_vector_space })
}

/// Outcome of reducing `R^n ∖ U` for a union of open convex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementReport {
    pub tails: Vec<TailCone>,
    /// Members whose tail cone is a vector space.
    pub retained: Vec<usize>,
    /// Interior point `a_i` of each member.
    pub anchors: Vec<Vector>,
    /// The tail space shared by all retained members, when there is one.
    pub common_subspace: Option<Vec<Vector>>,
    /// Basis of the transversal `T = V^⊥`.
    pub transversal: Option<Vec<Vector>>,
    /// Distinct points `b_i = T ∩ (a_i + V)`.
    pub points: Vec<Vector>,
    pub conclusion: String,
}

fn same_span(a: &[Vector], b: &[Vector], n: usize) -> bool {
    let ra = rank_of(a, n);
    let rb = rank_of(b, n);
    let both: Vec<Vector> = a.iter().chain(b).cloned().collect();
    ra == rb && rank_of(&both, n) == ra
}

/// Orthogonal projection of `x` onto the orthogonal complement of `span(v)`.
fn project_off(x: &[Scalar], v: &[Vector], n: usize) -> Result<Vector> {
    if v.is_empty() {
        return Ok(x.to_vec());
    }
    let m = Matrix::from_rows(v, n)?;
    let gram = m.mul(&m.transpose())?;
    let rhs: Vector = v.iter().map(|r| dot(r, x)).collect();
    let coeffs = crate::exact::solve(&gram, &rhs)?.particular().cloned().ok_or(Error::EmptySet)?;
    Ok(sub(x, &m.transpose().mul_vec(&coeffs)))
}

pub fn complement_homotopy(us: &[LinearSystem]) -> Result<ComplementReport> {
    let n = us.first().map_or(0, |u| u.dim());
    let mut tails = Vec::with_capacity(us.len());
    let mut anchors = Vec::with_capacity(us.len());
    for u in us {
        if u.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: u.dim() });
        }
        anchors.push(u.feasible().ok_or(Error::EmptySet)?);
        tails.push(tail_cone(u)?);
    }
    let retained: Vec<usize> = (0..us.len()).filter(|&i| tails[i].is_vector_space).collect();
    if retained.is_empty() {
        return Ok(ComplementReport {
            tails,
            retained,
            anchors,
            common_subspace: None,
            transversal: None,
            points: Vec::new(),
            conclusion: format!("no retained members: R^{n} \\ U reduces to R^{n} minus nothing retained"),
        });
    }
    let v0 = tails[retained[0]].lineality.clone();
    let common = retained.iter().all(|&i| same_span(&tails[i].lineality, &v0, n));
    if !common {
        return Ok(ComplementReport {
            tails,
            retained: retained.clone(),
            anchors,
            common_subspace: None,
            transversal: None,
            points: Vec::new(),
            conclusion: format!(
                "R^{n} \\ U ≃ R^{n} minus the union of {} affine subspaces a_i + tail(U_i)",
                retained.len()
            ),
        });
    }
    let transversal = if v0.is_empty() {
        (0..n).map(|i| crate::exact::scalar::unit(n, i)).collect()
    } else {
        Matrix::from_rows(&v0, n)?.kernel()
    };
    let mut points = BTreeSet::new();
    for &i in &retained {
        points.insert(project_off(&anchors[i], &v0, n)?);
    }
    let points: Vec<Vector> = points.into_iter().collect();
    let listed: Vec<String> = points.iter().map(|p| fmt_vec(p)).collect();
    let conclusion = format!(
        "R^{n} \\ U ≃ T minus {} point{} (dim T = {}): {}",
        points.len(),
        if points.len() == 1 { "" } else { "s" },
        transversal.len(),
        listed.join(", ")
    );
    Ok(ComplementReport {
        tails,
        retained,
        anchors,
        common_subspace: Some(v0),
        transversal: Some(transversal),
        points,
        conclusion,
    })
}
