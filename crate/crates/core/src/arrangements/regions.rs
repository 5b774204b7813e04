use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::SubspaceArrangement;
use crate::error::Result;
use crate::exact::scalar::{add, dot, factorial, frac, int, scale, sign, sub, unit, zeros};
use crate::exact::{rank_of, solve, LinearSystem, Matrix, Relation, Scalar, Solution, Vector};

/// An open cell of a hyperplane arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// `+1` or `-1` per hyperplane: the sign of `ℓ_i(x) - h_i` inside.
    pub sign_vector: Vec<i8>,
    pub witness: Vector,
    pub bounded: bool,
    /// Vertices of the closure, for bounded regions.
    pub vertices: Vec<Vector>,
    pub volume: Option<Scalar>,
    /// Simplices (`n + 1` points each) triangulating the closure.
    pub simplices: Vec<Vec<Vector>>,
}

impl Region {
    pub fn sign_string(&self) -> String {
        sign_string(&self.sign_vector)
    }
}

pub fn sign_string(signs: &[i8]) -> String {
    signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

/// Hyperplanes that coincide as sets, with the relative orientation of each
/// member to the first one.
#[derive(Debug, Clone)]
pub(crate) struct Wall {
    pub form: Vector,
    pub rhs: Scalar,
    pub members: Vec<(usize, i8)>,
}

fn proportion(a: &(Vector, Scalar), b: &(Vector, Scalar)) -> Option<Scalar> {
    let k = a.0.iter().position(|x| !x.is_zero())?;
    if b.0[k].is_zero() {
        return None;
    }
    let c = &b.0[k] / &a.0[k];
    let same = a.0.iter().zip(&b.0).all(|(x, y)| &(x * &c) == y) && (&a.1 * &c) == b.1;
    same.then_some(c)
}

pub(crate) fn walls(forms: &[(Vector, Scalar)]) -> Vec<Wall> {
    let mut out: Vec<Wall> = Vec::new();
    'outer: for (i, f) in forms.iter().enumerate() {
        for w in out.iter_mut() {
            if let Some(c) = proportion(&(w.form.clone(), w.rhs.clone()), f) {
                w.members.push((i, sign(&c)));
                continue 'outer;
            }
        }
        out.push(Wall { form: f.0.clone(), rhs: f.1.clone(), members: vec![(i, 1)] });
    }
    out
}

impl SubspaceArrangement {
    /// The open cell `sign_i · (ℓ_i(x) - h_i) > 0` for all `i`.
    pub fn region_system(&self, signs: &[i8]) -> Result<LinearSystem> {
        let forms = self.forms()?;
        let mut sys = LinearSystem::new(self.ambient_dim());
        for ((a, b), &s) in forms.iter().zip(signs) {
            let c = int(s as i64);
            sys.push(scale(a, &c), Relation::Gt, b * &c)?;
        }
        Ok(sys)
    }
}

/// Whether `{d : sys_homogeneous(d)}` is only the origin.
pub(crate) fn cone_is_trivial(homogeneous: &LinearSystem) -> bool {
    let n = homogeneous.dim();
    for j in 0..n {
        for s in [1i64, -1] {
            let probe = homogeneous.clone().ge(scale(&unit(n, j), &int(s)), int(1)).expect("same dimension");
            if probe.is_feasible() {
                return false;
            }
        }
    }
    true
}

fn affine_dim(points: &[&Vector]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let diffs: Vec<Vector> = points[1..].iter().map(|p| sub(p, points[0])).collect();
    rank_of(&diffs, points[0].len())
}

fn centroid(points: &[&Vector]) -> Vector {
    let n = points[0].len();
    let s = points.iter().fold(zeros(n), |acc, p| add(&acc, p));
    scale(&s, &frac(1, points.len() as i64))
}

/// Triangulates the face spanned by `face` (indices into `points`, affine
/// dimension `k`) by coning its facets from `apex` (default: centroid).
fn triangulate(
    points: &[Vector],
    face: &[usize],
    k: usize,
    tight: &[Vec<bool>],
    apex: Option<Vector>,
) -> Vec<Vec<Vector>> {
    if k == 0 {
        return vec![vec![points[face[0]].clone()]];
    }
    let refs: Vec<&Vector> = face.iter().map(|&i| &points[i]).collect();
    let c = apex.unwrap_or_else(|| centroid(&refs));
    let mut facets = BTreeSet::new();
    for t in tight {
        let subface: Vec<usize> = face.iter().copied().filter(|&i| t[i]).collect();
        if subface.is_empty() || subface.len() == face.len() {
            continue;
        }
        let sub_refs: Vec<&Vector> = subface.iter().map(|&i| &points[i]).collect();
        if affine_dim(&sub_refs) + 1 == k {
            facets.insert(subface);
        }
    }
    let mut out = Vec::new();
    for f in facets {
        for mut s in triangulate(points, &f, k - 1, tight, None) {
            s.insert(0, c.clone());
            out.push(s);
        }
    }
    out
}

/// `|det(p_1 - p_0, …, p_n - p_0)| / n!`
pub fn simplex_volume(simplex: &[Vector]) -> Scalar {
    let rows: Vec<Vector> = simplex[1..].iter().map(|p| sub(p, &simplex[0])).collect();
    let n = rows.len();
    let d = Matrix::square(&rows).and_then(|m| m.det()).unwrap_or_else(|_| Scalar::zero());
    d.abs() / Scalar::from_integer(factorial(n as u32))
}

/// All vertices of the arrangement: points cut out by `n` walls.
fn arrangement_vertices(walls: &[Wall], n: usize) -> Vec<Vector> {
    let mut out = BTreeSet::new();
    for subset in (0..walls.len()).combinations(n) {
        let rows: Vec<Vector> = subset.iter().map(|&g| walls[g].form.clone()).collect();
        let m = Matrix::square(&rows).expect("square");
        if m.rank() < n {
            continue;
        }
        let b: Vector = subset.iter().map(|&g| walls[g].rhs.clone()).collect();
        if let Ok(Solution::Unique(x)) = solve(&m, &b) {
            out.insert(x);
        }
    }
    out.into_iter().collect()
}

/// All open cells, ordered lexicographically by sign string (`+` first).
///
/// Coincident hyperplanes are merged into one wall during the search and
/// the sign vector is expanded back to every index afterwards.
pub fn enumerate_regions(a: &SubspaceArrangement) -> Result<Vec<Region>> {
    let forms = a.forms()?;
    let n = a.ambient_dim();
    let walls = walls(&forms);
    let vertices = arrangement_vertices(&walls, n);
    let vertex_signs: Vec<Vec<i8>> =
        vertices.iter().map(|v| walls.iter().map(|w| sign(&(dot(&w.form, v) - &w.rhs))).collect()).collect();

    let mut cells: Vec<(Vec<i8>, Vector)> = Vec::new();
    let mut stack: Vec<(Vec<i8>, LinearSystem)> = vec![(Vec::new(), LinearSystem::new(n))];
    while let Some((signs, sys)) = stack.pop() {
        if signs.len() == walls.len() {
            let witness = sys.feasible().expect("pruned search keeps feasible prefixes");
            cells.push((signs, witness));
            continue;
        }
        let w = &walls[signs.len()];
        for s in [-1i8, 1] {
            let c = int(s as i64);
            let next = sys.clone().gt(scale(&w.form, &c), &w.rhs * &c).expect("same dimension");
            if next.is_feasible() {
                let mut ns = signs.clone();
                ns.push(s);
                stack.push((ns, next));
            }
        }
    }

    let mut regions = Vec::with_capacity(cells.len());
    for (wall_signs, witness) in cells {
        let mut sign_vector = vec![0i8; forms.len()];
        for (w, &s) in walls.iter().zip(&wall_signs) {
            for &(i, rel) in &w.members {
                sign_vector[i] = s * rel;
            }
        }
        let mut sys = LinearSystem::new(n);
        for (w, &s) in walls.iter().zip(&wall_signs) {
            let c = int(s as i64);
            sys.push(scale(&w.form, &c), Relation::Gt, &w.rhs * &c)?;
        }
        let bounded = cone_is_trivial(&sys.homogeneous());
        let mut region =
            Region { sign_vector, witness, bounded, vertices: Vec::new(), volume: None, simplices: Vec::new() };
        if bounded {
            let on_closure: Vec<usize> = (0..vertices.len())
                .filter(|&v| vertex_signs[v].iter().zip(&wall_signs).all(|(&vs, &s)| vs == 0 || vs == s))
                .collect();
            let pts: Vec<Vector> = on_closure.iter().map(|&v| vertices[v].clone()).collect();
            let tight: Vec<Vec<bool>> =
                (0..walls.len()).map(|g| on_closure.iter().map(|&v| vertex_signs[v][g] == 0).collect()).collect();
            let all: Vec<usize> = (0..pts.len()).collect();
            let simplices = triangulate(&pts, &all, n, &tight, Some(region.witness.clone()));
            let volume = simplices.iter().map(|s| simplex_volume(s)).fold(Scalar::zero(), |a, b| a + b);
            region.vertices = pts;
            region.volume = Some(volume);
            region.simplices = simplices;
        }
        regions.push(region);
    }
    regions.sort_by_key(|r| r.sign_string());
    Ok(regions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ivec;

    fn lines(forms: &[(&[i64], i64)]) -> SubspaceArrangement {
        SubspaceArrangement::hyperplanes(2, forms.iter().map(|(a, b)| (ivec(a), int(*b))).collect()).unwrap()
    }

    #[test]
    fn one_line() {
        let r = enumerate_regions(&lines(&[(&[1, 0], 0)])).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| !x.bounded));
        assert_eq!(r[0].sign_string(), "+");
    }

    #[test]
    fn projective_plane_arrangement() {
        let a = lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, -1], 1)]);
        let r = enumerate_regions(&a).unwrap();
        assert_eq!(r.len(), 7);
        let bounded: Vec<&Region> = r.iter().filter(|x| x.bounded).collect();
        assert_eq!(bounded.len(), 1);
        assert_eq!(bounded[0].sign_string(), "---");
        assert_eq!(bounded[0].volume, Some(frac(1, 2)));
        let vs: BTreeSet<Vector> = bounded[0].vertices.iter().cloned().collect();
        let expected: BTreeSet<Vector> = [ivec(&[0, 0]), ivec(&[-1, 0]), ivec(&[0, -1])].into_iter().collect();
        assert_eq!(vs, expected);
    }

    #[test]
    fn five_generic_lines() {
        let a = lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 3), (&[1, -2], 5), (&[3, 1], -7)]);
        let r = enumerate_regions(&a).unwrap();
        assert_eq!(r.len(), 16);
        assert_eq!(r.iter().filter(|x| x.bounded).count(), 6);
        for reg in &r {
            assert!(a.region_system(&reg.sign_vector).unwrap().satisfied_by(&reg.witness));
        }
    }

    #[test]
    fn duplicate_hyperplanes_are_expanded() {
        let a = lines(&[(&[1, 0], 0), (&[0, 1], 0), (&[-1, 0], 0), (&[0, -1], 0)]);
        let r = enumerate_regions(&a).unwrap();
        let s: Vec<String> = r.iter().map(|x| x.sign_string()).collect();
        assert_eq!(s, vec!["++--", "+--+", "-++-", "--++"]);
    }

    #[test]
    fn square_volume() {
        let a = lines(&[(&[1, 0], 1), (&[0, 1], 1), (&[-1, 0], 1), (&[0, -1], 1)]);
        let r = enumerate_regions(&a).unwrap();
        let b: Vec<&Region> = r.iter().filter(|x| x.bounded).collect();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].volume, Some(int(4)));
        assert_eq!(b[0].vertices.len(), 4);
    }
}
