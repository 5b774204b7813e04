use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangements::AffineSubspace;
use crate::complexes::{CharacteristicPair, Face};
use crate::error::{Error, Result};
use crate::exact::scalar::{add, frac, int, sign, sub, unit, zeros};
use crate::exact::{solve, LinearSystem, Matrix, Scalar, Solution, Vector};

const RAY_ATTEMPTS: usize = 32;

/// One oriented `(n-1)`-simplex of the subdivision with its image tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSimplex {
    pub sign: i8,
    /// The chain `I_1 ⊂ … ⊂ I_n` of faces, empty for raw cycles.
    pub chain: Vec<Face>,
    pub images: Vec<Vector>,
}

/// Piecewise-linear map from the subdivided sphere to `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubordinateMap {
    pub dim: usize,
    pub h: Vector,
    pub vertex_images: BTreeMap<Face, Vector>,
    pub simplices: Vec<ImageSimplex>,
}

/// `x_I`: the point of `H_I` nearest to the origin, for every face `I`
/// (including the empty face, sent to the origin).
pub fn distinguished_points(pair: &CharacteristicPair, h: &[Scalar]) -> Result<BTreeMap<Face, Vector>> {
    if h.len() != pair.vertex_count() {
        return Err(Error::DimensionMismatch { expected: pair.vertex_count(), found: h.len() });
    }
    let n = pair.dim();
    let mut out = BTreeMap::new();
    out.insert(Vec::new(), zeros(n));
    for face in pair.complex().faces() {
        let eqs = face.iter().map(|&i| (pair.lambda()[i].clone(), h[i].clone())).collect();
        let space = AffineSubspace::from_equations(n, eqs)?
            .ok_or_else(|| Error::Invalid(format!("H_I is empty for face {}", crate::complexes::fmt_face(&face))))?;
        out.insert(face, space.nearest_to_origin());
    }
    Ok(out)
}

/// Sign of the permutation taking `order` to increasing order.
fn permutation_sign(order: &[usize]) -> i8 {
    let inversions = (0..order.len())
        .flat_map(|i| (i + 1..order.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| order[i] > order[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The canonical map `v_I ↦ x_I`, extended linearly over every chain.
/// A chain built by adding the vertices of `F` in the order `σ` carries the
/// sign `ε_F · sgn(σ)`.
pub fn subordinate_map(pair: &CharacteristicPair, h: &[Scalar]) -> Result<SubordinateMap> {
    let vertex_images = distinguished_points(pair, h)?;
    let mut simplices = Vec::new();
    for (facet, &eps) in pair.facets().iter().zip(pair.sphere().signs()) {
        for order in facet.iter().copied().permutations(facet.len()) {
            let mut chain = Vec::with_capacity(order.len());
            let mut cur: Face = Vec::new();
            for &v in &order {
                cur.push(v);
                cur.sort_unstable();
                chain.push(cur.clone());
            }
            let images = chain.iter().map(|f| vertex_images[f].clone()).collect();
            simplices.push(ImageSimplex { sign: eps * permutation_sign(&order), chain, images });
        }
    }
    Ok(SubordinateMap { dim: pair.dim(), h: h.to_vec(), vertex_images, simplices })
}

impl SubordinateMap {
    /// A map given directly by oriented image simplices, e.g. a polygon.
    pub fn from_simplices(dim: usize, simplices: Vec<(i8, Vec<Vector>)>) -> Result<Self> {
        for (_, pts) in &simplices {
            if pts.len() != dim || pts.iter().any(|p| p.len() != dim) {
                return Err(Error::DimensionMismatch { expected: dim, found: pts.len() });
            }
        }
        let simplices =
            simplices.into_iter().map(|(sign, images)| ImageSimplex { sign, chain: Vec::new(), images }).collect();
        Ok(SubordinateMap { dim, h: Vec::new(), vertex_images: BTreeMap::new(), simplices })
    }

    /// Vertexwise sum of two maps over the same pair.
    pub fn sum(&self, other: &SubordinateMap) -> Result<SubordinateMap> {
        if self.vertex_images.len() != other.vertex_images.len() || self.simplices.len() != other.simplices.len() {
            return Err(Error::Invalid("maps are defined over different complexes".into()));
        }
        let vertex_images = self
            .vertex_images
            .iter()
            .map(|(k, v)| other.vertex_images.get(k).map(|w| (k.clone(), add(v, w))))
            .collect::<Option<BTreeMap<_, _>>>()
            .ok_or_else(|| Error::Invalid("maps are defined over different complexes".into()))?;
        let simplices = self
            .simplices
            .iter()
            .map(|s| ImageSimplex {
                sign: s.sign,
                chain: s.chain.clone(),
                images: s.chain.iter().map(|f| vertex_images[f].clone()).collect(),
            })
            .collect();
        Ok(SubordinateMap { dim: self.dim, h: add(&self.h, &other.h), vertex_images, simplices })
    }

    /// Same map with every simplex orientation reversed.
    pub fn reversed(&self) -> SubordinateMap {
        let mut out = self.clone();
        for s in &mut out.simplices {
            s.sign = -s.sign;
        }
        out
    }
}

fn ray_direction(n: usize, attempt: usize, rng: &mut ChaCha8Rng) -> Vector {
    if attempt == 0 {
        let eps = frac(1, 7);
        let mut d = Vec::with_capacity(n);
        let mut p = Scalar::one();
        for _ in 0..n {
            d.push(p.clone());
            p *= &eps;
        }
        return d;
    }
    loop {
        let d: Vector = (0..n).map(|_| int(rng.random_range(-1000..=1000))).collect();
        if d.iter().any(|x| !x.is_zero()) {
            return d;
        }
    }
}

enum Crossing {
    Hit(i64),
    Miss,
    Degenerate,
}

fn crossing(simplex: &ImageSimplex, a: &[Scalar], d: &[Scalar]) -> Result<Crossing> {
    let n = a.len();
    let cols: Vec<Vector> = simplex.images.iter().map(|p| sub(p, a)).collect();
    let m = Matrix::from_columns(&cols, n)?;
    let det = m.det()?;
    if !det.is_zero() {
        let Solution::Unique(c) = solve(&m, d)? else { unreachable!("nonsingular") };
        if c.iter().all(|x| x.is_positive()) {
            return Ok(Crossing::Hit(simplex.sign as i64 * sign(&det) as i64));
        }
        if c.iter().all(|x| !x.is_negative()) {
            return Ok(Crossing::Degenerate);
        }
        return Ok(Crossing::Miss);
    }
    // Flat cone: either the point lies on the simplex or the ray may graze it.
    let k = simplex.images.len();
    let mut on = LinearSystem::new(k);
    let mut grazes = LinearSystem::new(k);
    for j in 0..k {
        on.push(unit(k, j), crate::exact::Relation::Ge, Scalar::zero())?;
        grazes.push(unit(k, j), crate::exact::Relation::Ge, Scalar::zero())?;
    }
    on.push(vec![Scalar::one(); k], crate::exact::Relation::Eq, Scalar::one())?;
    for i in 0..n {
        let row: Vector = cols.iter().map(|c| c[i].clone()).collect();
        on.push(row.clone(), crate::exact::Relation::Eq, Scalar::zero())?;
        grazes.push(row, crate::exact::Relation::Eq, d[i].clone())?;
    }
    if on.is_feasible() {
        return Err(Error::PointOnImage);
    }
    Ok(if grazes.is_feasible() { Crossing::Degenerate } else { Crossing::Miss })
}

/// Degree of `(f - a)/|f - a|`, counted as signed crossings of a ray from
/// `a`; degenerate rays are retried along a seeded direction schedule.
pub fn winding_number_seeded(f: &SubordinateMap, a: &[Scalar], seed: u64) -> Result<i64> {
    if a.len() != f.dim {
        return Err(Error::DimensionMismatch { expected: f.dim, found: a.len() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for attempt in 0..RAY_ATTEMPTS {
        let d = ray_direction(f.dim, attempt, &mut rng);
        let mut total = 0i64;
        for s in &f.simplices {
            match crossing(s, a, &d)? {
                Crossing::Hit(k) => total += k,
                Crossing::Miss => {}
                Crossing::Degenerate => continue 'attempt,
            }
        }
        return Ok(total);
    }
    Err(Error::RayRetriesExhausted(RAY_ATTEMPTS))
}

pub fn winding_number(f: &SubordinateMap, a: &[Scalar]) -> Result<i64> {
    winding_number_seeded(f, a, 0)
}
