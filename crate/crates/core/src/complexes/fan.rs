use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{sorted, Face, Issue, OrientedSphere, Report, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exact::scalar::{add, frac, is_zero_vec, primitive, scale, sign, unit};
use crate::exact::{solve, Matrix, Scalar, Solution, Vector};

const COMPLETENESS_SEED: u64 = 0x6776_706f_6c79;
const RANDOM_DIRECTIONS: usize = 10;
const PERTURB_ATTEMPTS: usize = 12;

/// A simplicial fan in `R^n` given by its rays and maximal cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vector>,
    cones: Vec<Face>,
}

/// Where a direction falls relative to the maximal cones.
enum Location {
    Interiors(usize),
    OnWall,
}

impl Fan {
    /// Integer rays are made primitive by dividing out the gcd of their
    /// entries; cones are sorted and deduplicated.
    pub fn new(dim: usize, rays: Vec<Vector>, cones: Vec<Face>) -> Result<Self> {
        for r in &rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: r.len() });
            }
        }
        let rays: Vec<Vector> = rays.iter().map(|r| primitive(r)).collect();
        let mut cs: Vec<Face> = cones.into_iter().map(sorted).collect();
        for c in &cs {
            if let Some(&v) = c.iter().find(|&&v| v >= rays.len()) {
                return Err(Error::Invalid(format!("cone refers to ray {} but only {} rays given", v + 1, rays.len())));
            }
        }
        cs.sort();
        cs.dedup();
        Ok(Fan { dim, rays, cones: cs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn cones(&self) -> &[Face] {
        &self.cones
    }

    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.rays.len(), self.cones.clone()).expect("cone indices checked")
    }

    fn cone_rows(&self, cone: &[usize]) -> Vec<Vector> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// Sign of the determinant of the cone's rays in increasing order, or 0
    /// when they are dependent or not `n` of them.
    pub fn cone_sign(&self, cone: &[usize]) -> i8 {
        if cone.len() != self.dim {
            return 0;
        }
        Matrix::square(&self.cone_rows(cone)).and_then(|m| m.det()).map(|d| sign(&d)).unwrap_or(0)
    }

    /// Coordinates of `v` in the basis of the cone's rays.
    pub fn coordinates(&self, cone: &[usize], v: &[Scalar]) -> Result<Option<Vector>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        if cone.len() != self.dim {
            return Ok(None);
        }
        let m = Matrix::from_columns(&self.cone_rows(cone), self.dim)?;
        Ok(match solve(&m, v)? {
            Solution::Unique(c) => Some(c),
            _ => None,
        })
    }

    /// Orientation of the underlying sphere induced by the ray determinants.
    pub fn orientation(&self) -> Result<OrientedSphere> {
        let signs = self.cones.iter().map(|c| self.cone_sign(c)).collect();
        OrientedSphere::with_signs(self.complex(), signs).map_err(|r| Error::Invalid(r.to_string()))
    }

    fn locate(&self, d: &[Scalar]) -> Location {
        let mut interiors = 0;
        for c in &self.cones {
            let Ok(Some(coords)) = self.coordinates(c, d) else { continue };
            if coords.iter().any(|x| x.is_negative()) {
                continue;
            }
            if coords.iter().any(|x| x.is_zero()) {
                return Location::OnWall;
            }
            interiors += 1;
        }
        Location::Interiors(interiors)
    }

    /// Probe directions: `±e_i` followed by seeded pseudo-random ones.
    fn probe_directions(&self, rng: &mut ChaCha8Rng) -> Vec<Vector> {
        let mut dirs = Vec::new();
        for i in 0..self.dim {
            let e = unit(self.dim, i);
            dirs.push(e.clone());
            dirs.push(scale(&e, &-Scalar::one()));
        }
        while dirs.len() < 2 * self.dim + RANDOM_DIRECTIONS {
            let d: Vector = (0..self.dim).map(|_| frac(rng.random_range(-50..=50), rng.random_range(1..=7))).collect();
            if !is_zero_vec(&d) {
                dirs.push(d);
            }
        }
        dirs
    }

    /// Checks cone sizes, ray independence, the pseudomanifold property,
    /// geometric orientability and completeness on probe directions.
    pub fn validate(&self) -> Report {
        let mut report = Report::default();
        for (i, r) in self.rays.iter().enumerate() {
            if is_zero_vec(r) {
                report.issues.push(Issue::ZeroRay(i));
            }
        }
        let complex = self.complex();
        let combinatorial = complex.validate();
        let mut cones_ok = true;
        for c in &self.cones {
            if c.len() != self.dim {
                report.issues.push(Issue::WrongConeSize { cone: c.clone(), expected: self.dim });
                cones_ok = false;
            } else if self.cone_sign(c) == 0 {
                report.issues.push(Issue::DependentRays(c.clone()));
                cones_ok = false;
            }
        }
        let combinatorial_ok = combinatorial.is_ok();
        report.merge(combinatorial);
        if !cones_ok {
            return report;
        }
        if combinatorial_ok {
            if let Err(r) = self.orientation_report() {
                report.merge(r);
            }
        }
        if let Some(issue) = self.completeness_issue() {
            report.issues.push(issue);
        }
        report
    }

    /// The first probe direction not covered exactly once, if any.
    fn completeness_issue(&self) -> Option<Issue> {
        let mut rng = ChaCha8Rng::seed_from_u64(COMPLETENESS_SEED);
        for d in self.probe_directions(&mut rng) {
            let mut probe = d;
            let mut covering = None;
            for attempt in 0..PERTURB_ATTEMPTS {
                match self.locate(&probe) {
                    Location::Interiors(k) => {
                        covering = Some(k);
                        break;
                    }
                    Location::OnWall => {
                        let eps = frac(1, 97 * (attempt as i64 + 1));
                        let r: Vector = (0..self.dim).map(|_| frac(rng.random_range(-9..=9), 1)).collect();
                        probe = add(&probe, &scale(&r, &eps));
                    }
                }
            }
            match covering {
                Some(1) => {}
                Some(k) => return Some(Issue::NotComplete { direction: probe, covering: k }),
                None => return Some(Issue::NotComplete { direction: probe, covering: 0 }),
            }
        }
        None
    }

    fn orientation_report(&self) -> std::result::Result<OrientedSphere, Report> {
        let signs = self.cones.iter().map(|c| self.cone_sign(c)).collect();
        OrientedSphere::with_signs(self.complex(), signs)
    }
}
