use std::collections::{BTreeMap, VecDeque};

use super::{Face, Issue, Report, SimplicialComplex};
use crate::error::{Error, Result};

/// A pure pseudomanifold with a coherent orientation, one sign per facet.
///
/// Signs are relative to the increasing vertex order of each facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSphere {
    complex: SimplicialComplex,
    signs: Vec<i8>,
}

/// Sign with which a facet induces an orientation on the ridge obtained by
/// deleting its `pos`-th vertex.
fn induced(sign: i8, pos: usize) -> i8 {
    if pos.is_multiple_of(2) {
        sign
    } else {
        -sign
    }
}

/// Ridge -> list of (facet index, position of the removed vertex).
fn ridge_table(c: &SimplicialComplex) -> BTreeMap<Face, Vec<(usize, usize)>> {
    let mut table: BTreeMap<Face, Vec<(usize, usize)>> = BTreeMap::new();
    for (fi, f) in c.facets().iter().enumerate() {
        for pos in 0..f.len() {
            let mut r = f.clone();
            r.remove(pos);
            table.entry(r).or_default().push((fi, pos));
        }
    }
    table
}

/// Pseudomanifold checks shared by every orientation routine.
fn structure_report(c: &SimplicialComplex) -> Report {
    let mut report = c.validate();
    if c.is_empty() {
        report.issues.push(Issue::Disconnected);
        return report;
    }
    if !c.is_pure() {
        report.issues.push(Issue::NotPure);
        return report;
    }
    for (ridge, owners) in ridge_table(c) {
        if owners.len() != 2 {
            report.issues.push(Issue::RidgeDegree { ridge, count: owners.len() });
        }
    }
    report
}

impl OrientedSphere {
    /// Orients a pseudomanifold by propagation from its first facet.
    pub fn from_complex(complex: SimplicialComplex) -> std::result::Result<Self, Report> {
        let mut report = structure_report(&complex);
        if !report.is_ok() {
            return Err(report);
        }
        let table = ridge_table(&complex);
        let mut adj: Vec<Vec<(usize, usize, usize, Face)>> = vec![Vec::new(); complex.facets().len()];
        for (ridge, owners) in &table {
            let (a, pa) = owners[0];
            let (b, pb) = owners[1];
            adj[a].push((b, pa, pb, ridge.clone()));
            adj[b].push((a, pb, pa, ridge.clone()));
        }
        let mut signs = vec![0i8; complex.facets().len()];
        signs[0] = 1;
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for (b, pa, pb, ridge) in &adj[a] {
                let want = -induced(signs[a], *pa) * induced(1, *pb);
                if signs[*b] == 0 {
                    signs[*b] = want;
                    queue.push_back(*b);
                } else if signs[*b] != want && !report.issues.contains(&Issue::NotOrientable { ridge: ridge.clone() }) {
                    report.issues.push(Issue::NotOrientable { ridge: ridge.clone() });
                }
            }
        }
        if signs.contains(&0) {
            report.issues.push(Issue::Disconnected);
        }
        if report.is_ok() {
            Ok(OrientedSphere { complex, signs })
        } else {
            Err(report)
        }
    }

    /// Uses the given facet signs, checking that they cancel on every ridge.
    pub fn with_signs(complex: SimplicialComplex, signs: Vec<i8>) -> std::result::Result<Self, Report> {
        let mut report = structure_report(&complex);
        if !report.is_ok() {
            return Err(report);
        }
        if signs.len() != complex.facets().len() || signs.iter().any(|s| s.abs() != 1) {
            report.issues.push(Issue::Disconnected);
            return Err(report);
        }
        for (ridge, owners) in ridge_table(&complex) {
            let (a, pa) = owners[0];
            let (b, pb) = owners[1];
            if induced(signs[a], pa) + induced(signs[b], pb) != 0 {
                report.issues.push(Issue::NotOrientable { ridge });
            }
        }
        if report.is_ok() {
            Ok(OrientedSphere { complex, signs })
        } else {
            Err(report)
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Number of vertices per facet.
    pub fn dim(&self) -> usize {
        self.complex.facets()[0].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn facets(&self) -> &[Face] {
        self.complex.facets()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, facet: &[usize]) -> Result<i8> {
        self.complex.facet_index(facet).map(|i| self.signs[i]).ok_or_else(|| Error::NotAFacet(facet.to_vec()))
    }

    /// Opposite orientation.
    pub fn flipped(&self) -> Self {
        OrientedSphere { complex: self.complex.clone(), signs: self.signs.iter().map(|s| -s).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_simplex_is_orientable() {
        for k in 2..=5 {
            let s = OrientedSphere::from_complex(SimplicialComplex::simplex_boundary(k)).unwrap();
            assert_eq!(s.dim(), k - 1);
            let again = OrientedSphere::with_signs(s.complex().clone(), s.signs().to_vec()).unwrap();
            assert_eq!(again, s);
            assert!(OrientedSphere::with_signs(s.complex().clone(), vec![1; k]).is_err());
        }
    }

    #[test]
    fn non_pseudomanifold_rejected() {
        let path = SimplicialComplex::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let err = OrientedSphere::from_complex(path).unwrap_err();
        assert!(err.issues.contains(&Issue::RidgeDegree { ridge: vec![0], count: 1 }));
        let two_circles =
            SimplicialComplex::new(6, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]])
                .unwrap();
        assert_eq!(OrientedSphere::from_complex(two_circles).unwrap_err().issues, vec![Issue::Disconnected]);
    }

    #[test]
    fn zero_sphere() {
        let s = OrientedSphere::from_complex(SimplicialComplex::new(2, vec![vec![0], vec![1]]).unwrap()).unwrap();
        assert_eq!(s.signs(), &[1, -1]);
    }
}
