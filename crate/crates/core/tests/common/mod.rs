#![allow(dead_code)]

use gvpoly::complexes::{CharacteristicPair, SimplicialComplex};
use gvpoly::exact::poly::{monomials_of_degree, var_names};
use gvpoly::exact::scalar::{frac, int, ivec};
use gvpoly::exact::{det_rows, solve, Matrix, MultiPoly, Scalar, Solution, Vector};
use gvpoly::virtualpoly::{chain_volume, virtual_chain};
use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_h(rng: &mut ChaCha8Rng, m: usize) -> Vector {
    (0..m).map(|_| frac(rng.random_range(-12..=12), rng.random_range(1..=4))).collect()
}

/// Oracle: recover the degree-n polynomial from chain volumes alone by
/// solving for its coefficients at random sample points.
pub fn interpolate_from_chains(pair: &CharacteristicPair, seed: u64) -> MultiPoly {
    let m = pair.vertex_count();
    let monos = monomials_of_degree(m, pair.dim() as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let samples: Vec<Vector> = (0..monos.len()).map(|_| random_h(&mut rng, m)).collect();
        let rows: Vec<Vector> = samples
            .iter()
            .map(|h| {
                monos
                    .iter()
                    .map(|k| MultiPoly::from_terms(var_names("h", m), [(k.clone(), Scalar::one())]).eval(h).unwrap())
                    .collect()
            })
            .collect();
        let a = Matrix::from_rows(&rows, monos.len()).unwrap();
        if a.rank() < monos.len() {
            continue;
        }
        let b: Vector = samples.iter().map(|h| chain_volume(&virtual_chain(pair, h).unwrap())).collect();
        let Solution::Unique(c) = solve(&a, &b).unwrap() else { panic!("full rank") };
        return MultiPoly::from_terms(var_names("h", m), monos.into_iter().zip(c));
    }
}

/// Value at `t` of the polynomial through `(j, ys[j])`, `j = 0, 1, …`.
pub fn lagrange_at(ys: &[Scalar], t: i64) -> Scalar {
    let nodes = ys.len();
    let mut out = Scalar::zero();
    for (j, y) in ys.iter().enumerate() {
        let mut l = Scalar::one();
        for k in (0..nodes).filter(|&k| k != j) {
            l *= frac(t - k as i64, j as i64 - k as i64);
        }
        out += l * y;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// h-vector of a pure `(n-1)`-dimensional complex from its f-vector.
pub fn h_vector(k: &SimplicialComplex, n: usize) -> Vec<usize> {
    let mut f = vec![1i64];
    f.extend(k.f_vector().into_iter().map(|x| x as i64));
    (0..=n)
        .map(|j| {
            let h: i64 = (0..=j).map(|i| (-1i64).pow((j - i) as u32) * binomial(n - i, j - i) as i64 * f[i]).sum();
            h as usize
        })
        .collect()
}

/// General position: every `n` normals independent and no `n + 1`
/// hyperplanes through a common point.
pub fn in_general_position(forms: &[(Vector, Scalar)], n: usize) -> bool {
    let normals_ok = forms.iter().combinations(n).all(|s| {
        let rows: Vec<Vector> = s.iter().map(|(a, _)| a.clone()).collect();
        !det_rows(&rows).unwrap().is_zero()
    });
    let points_ok = forms.iter().combinations(n + 1).all(|s| {
        let rows: Vec<Vector> = s
            .iter()
            .map(|(a, b)| {
                let mut r = a.clone();
                r.push(b.clone());
                r
            })
            .collect();
        !det_rows(&rows).unwrap().is_zero()
    });
    normals_ok && points_ok
}

pub fn random_generic_forms(n: usize, m: usize, seed: u64) -> Vec<(Vector, Scalar)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let forms: Vec<(Vector, Scalar)> = (0..m)
            .map(|_| {
                let a: Vec<i64> = (0..n).map(|_| rng.random_range(-5..=5)).collect();
                (ivec(&a), int(rng.random_range(-6..=6)))
            })
            .collect();
        if in_general_position(&forms, n) {
            return forms;
        }
    }
}
