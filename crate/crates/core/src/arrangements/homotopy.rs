use std::collections::BTreeMap;

use super::regions::walls;
use super::{AffineSubspace, SubspaceArrangement};
use crate::complexes::Face;
use crate::error::Result;
use crate::exact::{rank_of, Matrix, Vector};

/// Homotopy type of the union of a hyperplane arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionHomotopy {
    /// No nonzero direction is parallel to every hyperplane.
    pub nondegenerate: bool,
    /// Basis of `V`, the intersection of the linear parts.
    pub linearity_space: Vec<Vector>,
    /// Dimension of the spheres in the wedge (`-1` for an empty union).
    pub wedge_dim: i64,
    pub sphere_count: usize,
    /// Ranks of `H_0, …, H_{wedge_dim}`.
    pub homology_ranks: Vec<usize>,
    /// Total number of complement regions, from the same count.
    pub region_count: usize,
}

/// Intersection poset of the distinct hyperplanes, each flat labelled by
/// the set of walls containing it. The ambient space has the empty label.
fn flats(walls_as_members: &SubspaceArrangement) -> BTreeMap<Face, AffineSubspace> {
    let mut out = BTreeMap::new();
    out.insert(Vec::new(), AffineSubspace::ambient(walls_as_members.ambient_dim()));
    for (_, space) in walls_as_members.nonempty_intersections() {
        let label: Face =
            (0..walls_as_members.len()).filter(|&j| walls_as_members.members()[j].contains_subspace(&space)).collect();
        out.entry(label).or_insert(space);
    }
    out
}

/// Bounded-region and region counts from the characteristic polynomial of
/// the intersection poset, independent of any region enumeration.
pub fn union_homotopy(a: &SubspaceArrangement) -> Result<UnionHomotopy> {
    let forms = a.forms()?;
    let n = a.ambient_dim();
    let ws = walls(&forms);
    let normals: Vec<Vector> = ws.iter().map(|w| w.form.clone()).collect();
    let linearity_space = if normals.is_empty() {
        (0..n).map(|i| crate::exact::scalar::unit(n, i)).collect()
    } else {
        Matrix::from_rows(&normals, n)?.kernel()
    };
    let l = linearity_space.len();
    let r = n - l;
    let distinct = SubspaceArrangement::hyperplanes(n, ws.iter().map(|w| (w.form.clone(), w.rhs.clone())).collect())?;
    let poset = flats(&distinct);

    // Möbius function from the top (the ambient space) downwards.
    let labels: Vec<&Face> = poset.keys().collect();
    let mut order: Vec<&Face> = labels.clone();
    order.sort_by_key(|f| f.len());
    let mut mu: BTreeMap<&Face, i64> = BTreeMap::new();
    for x in &order {
        if x.is_empty() {
            mu.insert(x, 1);
            continue;
        }
        let s: i64 = order.iter().filter(|y| y.len() < x.len() && y.iter().all(|j| x.contains(j))).map(|y| mu[y]).sum();
        mu.insert(x, -s);
    }
    let mut chi_one = 0i64;
    let mut chi_minus_one = 0i64;
    for (label, space) in &poset {
        let e = space.dimension() - l;
        let m = mu[label];
        chi_one += m;
        chi_minus_one += if e % 2 == 0 { m } else { -m };
    }
    let parity = if r.is_multiple_of(2) { 1 } else { -1 };
    let sphere_count = (parity * chi_one).unsigned_abs() as usize;
    let region_count = (parity * chi_minus_one).unsigned_abs() as usize;
    let homology_ranks = match r {
        0 => Vec::new(),
        1 => vec![1 + sphere_count],
        _ => {
            let mut h = vec![0; r];
            h[0] = 1;
            h[r - 1] = sphere_count;
            h
        }
    };
    Ok(UnionHomotopy {
        nondegenerate: l == 0,
        linearity_space,
        wedge_dim: r as i64 - 1,
        sphere_count,
        homology_ranks,
        region_count,
    })
}

/// One stratum `{x : I(x) = label}` of the natural stratification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub label: Face,
    pub dimension: usize,
    /// Length of the longest chain of strata starting here and descending
    /// through its closure; closed strata have rank 1.
    pub rank: usize,
}

pub fn stratify(a: &SubspaceArrangement) -> Vec<Stratum> {
    let mut by_label: BTreeMap<Face, usize> = BTreeMap::new();
    for (_, space) in a.nonempty_intersections() {
        let label: Face = (0..a.len()).filter(|&j| a.members()[j].contains_subspace(&space)).collect();
        by_label.entry(label).or_insert(space.dimension());
    }
    let mut labels: Vec<Face> = by_label.keys().cloned().collect();
    labels.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
    let mut rank: BTreeMap<Face, usize> = BTreeMap::new();
    for x in &labels {
        let below = labels
            .iter()
            .filter(|y| y.len() > x.len() && x.iter().all(|j| y.contains(j)))
            .map(|y| rank[y])
            .max()
            .unwrap_or(0);
        rank.insert(x.clone(), below + 1);
    }
    let mut out: Vec<Stratum> =
        labels.into_iter().map(|l| Stratum { dimension: by_label[&l], rank: rank[&l], label: l }).collect();
    out.sort_by(|x, y| x.label.len().cmp(&y.label.len()).then_with(|| x.label.cmp(&y.label)));
    out
}

/// Rank of the linear parts of the members' normals, used by reports.
pub fn normal_rank(a: &SubspaceArrangement) -> Result<usize> {
    let forms = a.forms()?;
    let rows: Vec<Vector> = forms.into_iter().map(|(f, _)| f).collect();
    Ok(rank_of(&rows, a.ambient_dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::enumerate_regions;
    use crate::exact::scalar::{int, ivec};

    fn lines(forms: &[(&[i64], i64)]) -> SubspaceArrangement {
        SubspaceArrangement::hyperplanes(2, forms.iter().map(|(a, b)| (ivec(a), int(*b))).collect()).unwrap()
    }

    #[test]
    fn crossing_lines() {
        let u = union_homotopy(&lines(&[(&[1, 0], 0), (&[0, 1], 0)])).unwrap();
        assert!(u.nondegenerate);
        assert_eq!(u.sphere_count, 0);
        assert_eq!(u.homology_ranks, vec![1, 0]);
        assert_eq!(u.region_count, 4);
    }

    #[test]
    fn triangle_and_five_lines() {
        let u = union_homotopy(&lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1)])).unwrap();
        assert_eq!((u.wedge_dim, u.sphere_count, u.region_count), (1, 1, 7));
        let five = lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 3), (&[1, -2], 5), (&[3, 1], -7)]);
        let u = union_homotopy(&five).unwrap();
        assert_eq!(u.sphere_count, 6);
        assert_eq!(u.homology_ranks, vec![1, 6]);
        assert_eq!(u.region_count, enumerate_regions(&five).unwrap().len());
    }

    #[test]
    fn parallel_lines_are_degenerate() {
        let u = union_homotopy(&lines(&[(&[1, 0], 0), (&[1, 0], 1), (&[2, 0], 5)])).unwrap();
        assert!(!u.nondegenerate);
        assert_eq!(u.linearity_space.len(), 1);
        assert_eq!(u.wedge_dim, 0);
        assert_eq!(u.sphere_count, 2);
        assert_eq!(u.homology_ranks, vec![3]);
    }

    #[test]
    fn strata() {
        let s = stratify(&lines(&[(&[1, 0], 0), (&[0, 1], 0)]));
        let got: Vec<(Face, usize, usize)> = s.into_iter().map(|x| (x.label, x.dimension, x.rank)).collect();
        assert_eq!(got, vec![(vec![0], 1, 2), (vec![1], 1, 2), (vec![0, 1], 0, 1)]);

        let one = stratify(&lines(&[(&[1, 0], 0)]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rank, 1);

        let conc = stratify(&lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]));
        assert_eq!(conc.len(), 4);
        assert_eq!(conc[3].label, vec![0, 1, 2]);
        assert_eq!(conc[3].rank, 1);
        assert!(conc[..3].iter().all(|x| x.rank == 2 && x.dimension == 1));
    }
}
