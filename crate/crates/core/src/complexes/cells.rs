use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Face, Fan};
use crate::error::{Error, Result};
use crate::exact::scalar::{add, frac, int, scale};
use crate::exact::{Scalar, Vector};

const GENERIC_ATTEMPTS: usize = 64;

/// Incoming rays of a maximal cone with respect to a generic vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncomingIndex {
    pub cone: Face,
    pub incoming: Vec<usize>,
    pub index: usize,
}

/// Ray `ρ` of the cone `τ` is incoming for `v` when the opposite facet,
/// translated by `v`, meets `τ` in an unbounded set; equivalently the
/// `ρ`-coordinate of `v` in the basis of `τ` is positive.
pub fn incoming_index(fan: &Fan, cone: &[usize], v: &[Scalar]) -> Result<IncomingIndex> {
    let coords = fan
        .coordinates(cone, v)?
        .ok_or_else(|| Error::Invalid(format!("cone {} is not full dimensional", super::fmt_face(cone))))?;
    let mut incoming = Vec::new();
    for (j, c) in coords.iter().enumerate() {
        if c.is_zero() {
            let wall = cone.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &r)| r).collect();
            return Err(Error::NonGeneric { cone: cone.to_vec(), wall });
        }
        if c.is_positive() {
            incoming.push(cone[j]);
        }
    }
    let index = incoming.len();
    Ok(IncomingIndex { cone: cone.to_vec(), incoming, index })
}

/// Number of maximal cones of each index `0..=n`.
pub fn cell_vector(fan: &Fan, v: &[Scalar]) -> Result<Vec<usize>> {
    let mut counts = vec![0; fan.dim() + 1];
    for c in fan.cones() {
        counts[incoming_index(fan, c, v)?.index] += 1;
    }
    Ok(counts)
}

fn is_generic(fan: &Fan, v: &[Scalar]) -> bool {
    fan.cones().iter().all(|c| incoming_index(fan, c, v).is_ok())
}

/// A vector off every wall of the fan, starting from the barycenter of the
/// first cone and perturbing with a generator seeded by `seed`.
pub fn random_generic_vector(fan: &Fan, seed: u64) -> Result<Vector> {
    let n = fan.dim();
    let mut v = vec![Scalar::zero(); n];
    if let Some(c) = fan.cones().first() {
        for &r in c {
            v = add(&v, &fan.rays()[r]);
        }
        v = scale(&v, &frac(1, c.len().max(1) as i64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..GENERIC_ATTEMPTS {
        if is_generic(fan, &v) {
            return Ok(v);
        }
        let eps = frac(1, 10 + attempt as i64);
        let r: Vector = (0..n).map(|_| int(rng.random_range(-20..=20))).collect();
        v = add(&v, &scale(&r, &eps));
    }
    Err(Error::RayRetriesExhausted(GENERIC_ATTEMPTS))
}

pub fn generic_vector(fan: &Fan) -> Result<Vector> {
    random_generic_vector(fan, 0)
}
