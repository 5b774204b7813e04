//! One PASS/FAIL line per acceptance criterion. Runs as a plain binary
//! (`harness = false`) and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use gvpoly::arrangements::{enumerate_regions, nerve, realize_nerve, union_homotopy, SubspaceArrangement};
use gvpoly::cohomology::{
    betti, character_basis, cohomology_ring, linear_relation_check, poincare_check, sr_quotient_dims, top_products,
};
use gvpoly::complexes::{cell_vector, fmt_face, random_generic_vector, CharacteristicPair, Face, SimplicialComplex};
use gvpoly::exact::poly::var_names;
use gvpoly::exact::scalar::{frac, int, ivec};
use gvpoly::exact::{det_rows, MultiPoly, Scalar, Vector};
use gvpoly::fixtures;
use gvpoly::virtualpoly::{
    chain_volume, integral_value, virtual_chain, volume_polynomial, winding_number, SubordinateMap,
};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

use common::{binomial, h_vector, interpolate_from_chains, lagrange_at, random_generic_forms, random_h};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Oracle for a squarefree top partial: `1 / (ε_I det ℓ_I)` on facets, 0 otherwise.
fn expected_top(p: &CharacteristicPair, subset: &[usize]) -> Result<Scalar, String> {
    if !p.complex().is_face(subset) {
        return Ok(Scalar::zero());
    }
    let rows: Vec<Vector> = subset.iter().map(|&i| p.lambda()[i].clone()).collect();
    let d = det_rows(&rows).map_err(err)?;
    let eps = p.sphere().sign(subset).map_err(err)?;
    Ok(Scalar::one() / if eps > 0 { d } else { -d })
}

fn partial(p: &MultiPoly, subset: &[usize]) -> MultiPoly {
    subset.iter().fold(p.clone(), |acc, &i| acc.derivative(i))
}

fn bkk_cross_route() -> Outcome {
    let cases = [
        ("projective_plane", fixtures::projective_plane()),
        ("quadrant", fixtures::quadrant()),
        ("hirzebruch", fixtures::hirzebruch()),
        ("octahedral", fixtures::octahedral()),
    ];
    let mut checked = 0;
    for (k, (name, p)) in cases.iter().enumerate() {
        let vol = volume_polynomial(p).map_err(err)?;
        let mut rng = ChaCha8Rng::seed_from_u64(100 + k as u64);
        for s in 0..100 {
            let h = random_h(&mut rng, p.vertex_count());
            let chain = chain_volume(&virtual_chain(p, &h).map_err(err)?);
            let poly = vol.eval(&h).map_err(err)?;
            ensure!(chain == poly, "{name} sample {s}: chain {chain} vs polynomial {poly}");
            checked += 1;
        }
    }
    Ok(format!("{checked} samples over 4 fans agree exactly"))
}

fn derivative_contract() -> Outcome {
    let mut checked = 0;
    let mut notes = Vec::new();
    for (name, p) in fixtures::all().into_iter().filter(|(_, p)| p.dim() == 2) {
        let oracle = interpolate_from_chains(&p, 7);
        let vol = volume_polynomial(&p).map_err(err)?;
        ensure!(vol == oracle, "{name}: volume polynomial {vol} differs from interpolated {oracle}");
        for subset in (0..p.vertex_count()).combinations(2) {
            let want = expected_top(&p, &subset)?;
            let got = partial(&oracle, &subset);
            ensure!(
                got == MultiPoly::constant(oracle.vars().to_vec(), want.clone()),
                "{name} {}: partial {got}, expected {want}",
                fmt_face(&subset)
            );
            if p.complex().is_face(&subset) {
                let sign = p.sign_of(&subset).map_err(err)?;
                let det = p.facet_determinant(&subset).map_err(err)?.abs();
                ensure!(want == int(sign as i64) / det, "{name} {}: {want} is not sign/|det|", fmt_face(&subset));
            }
            checked += 1;
        }
        notes.push(name);
    }
    Ok(format!("{checked} squarefree partials on [{}] match sign/|det| on facets and 0 elsewhere", notes.join(", ")))
}

fn betti_agreement() -> Outcome {
    let expected: BTreeMap<&str, Vec<usize>> = [
        ("projective_plane", vec![1, 1, 1]),
        ("quadrant", vec![1, 2, 1]),
        ("hirzebruch", vec![1, 2, 1]),
        ("octahedral", vec![1, 3, 3, 1]),
    ]
    .into_iter()
    .collect();
    let mut out = Vec::new();
    for (name, p) in fixtures::all() {
        let mac = betti(&cohomology_ring(&p).map_err(err)?);
        let sr = sr_quotient_dims(&p).map_err(err)?;
        ensure!(mac == sr, "{name}: Macaulay {mac:?} vs SR {sr:?}");
        ensure!(mac == h_vector(p.complex(), p.dim()), "{name}: {mac:?} differs from the h-vector");
        if let Some(fan) = p.fan() {
            for seed in 0..5 {
                let v = random_generic_vector(fan, seed).map_err(err)?;
                let cells = cell_vector(fan, &v).map_err(err)?;
                ensure!(cells == mac, "{name} seed {seed}: cells {cells:?} vs {mac:?}");
            }
        }
        if let Some(e) = expected.get(name) {
            ensure!(&mac == e, "{name}: {mac:?}, expected {e:?}");
        }
        out.push(format!("{name}{mac:?}"));
    }
    Ok(out.join(" "))
}

fn euler_characteristic() -> Outcome {
    for (name, p) in fixtures::all() {
        let total: usize = cohomology_ring(&p).map_err(err)?.dims().iter().sum();
        ensure!(total == p.facets().len(), "{name}: {total} vs {} cones", p.facets().len());
    }
    Ok(format!("{} fixtures", fixtures::all().len()))
}

fn poincare_duality() -> Outcome {
    for (name, p) in fixtures::all() {
        let a = cohomology_ring(&p).map_err(err)?;
        let r = poincare_check(&a);
        ensure!(r.is_ok(), "{name}: {:?}", r.issues);
        for (d, rank) in r.pairing_ranks.iter().enumerate() {
            ensure!(*rank == Some(a.dim(d)), "{name} degree {d}: rank {rank:?}");
        }
    }
    Ok("every pairing matrix has full rank".into())
}

fn top_product_signs() -> Outcome {
    let mut count = 0;
    for (name, p) in fixtures::all() {
        for (subset, value) in top_products(&p).map_err(err)? {
            let want = expected_top(&p, &subset)?;
            ensure!(value == want, "{name} {}: {value}, expected {want}", fmt_face(&subset));
            if p.complex().is_face(&subset) && p.mode() == gvpoly::complexes::Mode::Integer {
                let sign = int(p.sign_of(&subset).map_err(err)? as i64);
                ensure!(value == sign, "{name} {}: {value} vs sign {sign}", fmt_face(&subset));
            }
            count += 1;
        }
    }
    Ok(format!("{count} n-subsets; equals sign_of on unimodular fixtures, sign/|det| on the double cover"))
}

fn linear_relations() -> Outcome {
    let mut count = 0;
    for (name, p) in fixtures::all() {
        for chi in character_basis(p.dim()) {
            let c = linear_relation_check(&p, &chi).map_err(err)?;
            ensure!(c.is_ok(), "{name} {chi:?}: residual {}", c.residual);
            count += 1;
        }
    }
    Ok(format!("{count} relations vanish identically"))
}

fn arrangement_homotopy() -> Outcome {
    let mut out = Vec::new();
    for (n, m) in [(2, 3), (2, 4), (2, 5), (3, 4)] {
        let a = SubspaceArrangement::hyperplanes(n, random_generic_forms(n, m, 40 + m as u64)).map_err(err)?;
        let bounded = enumerate_regions(&a).map_err(err)?.iter().filter(|r| r.bounded).count();
        let spheres = union_homotopy(&a).map_err(err)?.sphere_count;
        let want = binomial(m - 1, n);
        ensure!(
            bounded == want && spheres == want,
            "n={n} m={m}: bounded {bounded}, spheres {spheres}, expected {want}"
        );
        out.push(format!("(n={n},m={m})->{want}"));
    }
    Ok(out.join(" "))
}

fn random_complex(seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces: Vec<Face> = (0..5)
        .map(|_| {
            let k = rng.random_range(1..=3);
            let f: Face = (0..k).map(|_| rng.random_range(0..6)).sorted().dedup().collect();
            f
        })
        .chain((0..6).map(|v| vec![v]))
        .collect();
    SimplicialComplex::from_faces(6, faces).expect("vertices in range")
}

fn nerve_realization() -> Outcome {
    let cases = [
        ("edge", SimplicialComplex::simplex(1)),
        ("hollow triangle", SimplicialComplex::simplex_boundary(2)),
        (
            "hollow square",
            SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).map_err(err)?,
        ),
        ("tetrahedron boundary", SimplicialComplex::simplex_boundary(3)),
        ("random 6-vertex", random_complex(6)),
    ];
    for (name, d) in &cases {
        let a = realize_nerve(d).map_err(err)?;
        ensure!(nerve(&a).is_isomorphic(d), "{name}: nerve is not isomorphic");
    }
    Ok(format!("{} complexes round trip", cases.len()))
}

fn integral_polynomiality() -> Outcome {
    let p = fixtures::projective_plane();
    let xy = var_names("x", 2);
    let base = vec![frac(1, 3), int(1), frac(1, 2)];
    for src in ["1", "x1", "x1*x2"] {
        let q = MultiPoly::parse(src, xy.clone()).map_err(err)?;
        // I_Q has degree at most deg Q + n in each direction.
        let nodes = q.degree().unwrap_or(0) as usize + p.dim() + 1;
        for i in 0..p.vertex_count() {
            let at = |t: i64| {
                let mut h = base.clone();
                h[i] += int(t);
                integral_value(&p, &q, &h)
            };
            let ys: Vec<Scalar> = (0..nodes as i64).map(at).collect::<Result<_, _>>().map_err(err)?;
            for t in [-4i64, 9, 13] {
                let direct = at(t).map_err(err)?;
                let interp = lagrange_at(&ys, t);
                ensure!(interp == direct, "Q={src} direction h{} t={t}: {interp} vs {direct}", i + 1);
            }
        }
    }
    Ok("Q in {1, x1, x1*x2}, every h_i direction, 3 fresh points".into())
}

fn winding_oracle() -> Outcome {
    let c = [ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[1, 1]), ivec(&[0, 1])];
    let edges = (0..4).map(|i| (1i8, vec![c[i].clone(), c[(i + 1) % 4].clone()])).collect();
    let square = SubordinateMap::from_simplices(2, edges).map_err(err)?;
    let center = vec![frac(1, 2), frac(1, 2)];
    let inside = winding_number(&square, &center).map_err(err)?;
    let outside = winding_number(&square, &ivec(&[3, 1])).map_err(err)?;
    let reversed = winding_number(&square.reversed(), &center).map_err(err)?;
    ensure!((inside, outside, reversed) == (1, 0, -1), "square degrees {inside}, {outside}, {reversed}");

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs = [fixtures::projective_plane(), fixtures::hirzebruch(), fixtures::double_cover()];
    let mut weights = 0;
    for s in 0..20 {
        let p = &pairs[s % pairs.len()];
        let h = random_h(&mut rng, p.vertex_count());
        let key = |c: gvpoly::virtualpoly::VirtualChain| -> BTreeMap<Vec<i8>, i64> {
            c.regions.into_iter().map(|(r, w)| (r.sign_vector, w)).collect()
        };
        let a = key(virtual_chain(p, &h).map_err(err)?);
        let b = key(virtual_chain(&p.flipped(), &h).map_err(err)?);
        let negated: BTreeMap<Vec<i8>, i64> = a.iter().map(|(k, w)| (k.clone(), -w)).collect();
        ensure!(b == negated, "sample {s}: flipped weights {b:?} vs {a:?}");
        weights += a.len();
    }
    Ok(format!("square degrees (+1, 0, -1); {weights} chain weights negate on 20 random h"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("BKK cross-route equality", bkk_cross_route),
        ("derivative contract", derivative_contract),
        ("three-way Betti agreement", betti_agreement),
        ("Euler characteristic", euler_characteristic),
        ("Poincare duality", poincare_duality),
        ("Stanley-Reisner top products", top_product_signs),
        ("linear relations", linear_relations),
        ("arrangement homotopy", arrangement_homotopy),
        ("nerve realization", nerve_realization),
        ("polynomiality of I_Q", integral_polynomiality),
        ("winding-number oracle", winding_oracle),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
