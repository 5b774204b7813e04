use gvpoly::arrangements::*;
use gvpoly::complexes::{Face, SimplicialComplex};
use gvpoly::exact::scalar::{int, ivec};
use gvpoly::exact::{Scalar, Vector};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

use common::{binomial, random_generic_forms as random_generic};

fn bounded_count(a: &SubspaceArrangement) -> usize {
    enumerate_regions(a).unwrap().iter().filter(|r| r.bounded).count()
}

#[test]
fn generic_arrangement_homotopy() {
    for (n, m) in [(2, 3), (2, 4), (2, 5), (3, 4)] {
        for seed in 0..3 {
            let a = SubspaceArrangement::hyperplanes(n, random_generic(n, m, seed)).unwrap();
            let u = union_homotopy(&a).unwrap();
            let bounded = bounded_count(&a);
            assert_eq!(bounded, binomial(m - 1, n), "n={n} m={m} seed={seed}");
            assert_eq!(u.sphere_count, bounded);
            assert_eq!(u.wedge_dim, n as i64 - 1);
            assert_eq!(u.region_count, enumerate_regions(&a).unwrap().len());
        }
    }
}

fn nerve_fixtures() -> Vec<(&'static str, SimplicialComplex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let random: Vec<Face> = (0..5)
        .map(|_| {
            let k = rng.random_range(1..=3);
            let mut f: Face = (0..k).map(|_| rng.random_range(0..6)).collect();
            f.sort_unstable();
            f.dedup();
            f
        })
        .chain((0..6).map(|v| vec![v]))
        .collect();
    vec![
        ("edge", SimplicialComplex::simplex(1)),
        ("hollow triangle", SimplicialComplex::simplex_boundary(2)),
        ("hollow square", SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()),
        ("tetrahedron boundary", SimplicialComplex::simplex_boundary(3)),
        ("random", SimplicialComplex::from_faces(6, random).unwrap()),
    ]
}

#[test]
fn nerve_realization_round_trips() {
    for (name, d) in nerve_fixtures() {
        let a = realize_nerve(&d).unwrap();
        assert!(nerve(&a).is_isomorphic(&d), "{name}");
    }
}

#[test]
fn tail_cone_zero_iff_bounded() {
    let a = SubspaceArrangement::hyperplanes(2, random_generic(2, 5, 11)).unwrap();
    for r in enumerate_regions(&a).unwrap() {
        let t = tail_cone(&a.region_system(&r.sign_vector).unwrap()).unwrap();
        assert_eq!(t.is_zero(), r.bounded, "{}", r.sign_string());
    }
}

#[test]
fn projective_plane_regions() {
    let a = SubspaceArrangement::hyperplanes(
        2,
        vec![(ivec(&[1, 0]), int(0)), (ivec(&[0, 1]), int(0)), (ivec(&[-1, -1]), int(1))],
    )
    .unwrap();
    let regions = enumerate_regions(&a).unwrap();
    assert_eq!(regions.len(), 7);
    let bounded: Vec<_> = regions.iter().filter(|r| r.bounded).collect();
    assert_eq!(bounded.len(), 1);
    // The triangle x < 0, y < 0, x + y > -1.
    assert_eq!(bounded[0].sign_string(), "---");
    assert_eq!(bounded[0].volume, Some(gvpoly::exact::scalar::frac(1, 2)));
}

#[test]
fn domination_examples() {
    let generic = SubspaceArrangement::hyperplanes(
        2,
        vec![(ivec(&[1, 0]), int(0)), (ivec(&[0, 1]), int(0)), (ivec(&[1, 1]), int(1))],
    )
    .unwrap();
    let concurrent = SubspaceArrangement::hyperplanes(
        2,
        vec![(ivec(&[1, 0]), int(0)), (ivec(&[0, 1]), int(0)), (ivec(&[1, 1]), int(0))],
    )
    .unwrap();
    assert!(compatible_map_exists(&generic, &concurrent).unwrap());
    assert!(!compatible_map_exists(&concurrent, &generic).unwrap());
}

fn random_nerve(faces: Vec<Vec<usize>>) -> Nerve {
    let mut faces: Vec<Face> = faces
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    faces.extend((0..5).map(|v| vec![v]));
    Nerve::from_complex(SimplicialComplex::from_faces(5, faces).unwrap())
}

fn nerve_strategy() -> impl Strategy<Value = Nerve> {
    prop::collection::vec(prop::collection::vec(0usize..5, 1..4), 0..5).prop_map(random_nerve)
}

fn forms_strategy(n: usize, m: usize) -> impl Strategy<Value = Vec<(Vector, Scalar)>> {
    prop::collection::vec((prop::collection::vec(-4i64..=4, n), -5i64..=5), m)
        .prop_map(|rows| rows.into_iter().map(|(a, b)| (ivec(&a), int(b))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn domination_is_a_preorder(x in nerve_strategy(), y in nerve_strategy(), z in nerve_strategy()) {
        prop_assert!(dominates(&x, &x).unwrap());
        if dominates(&x, &y).unwrap() && dominates(&y, &z).unwrap() {
            prop_assert!(dominates(&x, &z).unwrap());
        }
    }

    #[test]
    fn random_nerves_realize(x in nerve_strategy()) {
        let a = realize_nerve(x.complex()).unwrap();
        prop_assert!(nerve(&a).is_isomorphic(x.complex()));
    }

    #[test]
    fn homology_rank_matches_bounded_regions(forms in forms_strategy(2, 4)) {
        prop_assume!(forms.iter().all(|(a, _)| a.iter().any(|c| !c.is_zero())));
        let a = SubspaceArrangement::hyperplanes(2, forms).unwrap();
        let u = union_homotopy(&a).unwrap();
        prop_assume!(u.nondegenerate);
        prop_assert_eq!(u.sphere_count, bounded_count(&a));
        prop_assert_eq!(*u.homology_ranks.last().unwrap(), if u.wedge_dim == 0 { 1 + u.sphere_count } else { u.sphere_count });
    }

    #[test]
    fn bounded_volume_ignores_labels(forms in forms_strategy(2, 4), perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        prop_assume!(forms.iter().all(|(a, _)| a.iter().any(|c| !c.is_zero())));
        let total = |fs: Vec<(Vector, Scalar)>| -> Scalar {
            let a = SubspaceArrangement::hyperplanes(2, fs).unwrap();
            enumerate_regions(&a).unwrap().iter().filter_map(|r| r.volume.clone()).fold(Scalar::zero(), |s, v| s + v)
        };
        let permuted: Vec<(Vector, Scalar)> = perm.iter().map(|&i| forms[i].clone()).collect();
        prop_assert_eq!(total(forms), total(permuted));
    }

    #[test]
    fn tail_cone_matches_boundedness(forms in forms_strategy(2, 3)) {
        prop_assume!(forms.iter().all(|(a, _)| a.iter().any(|c| !c.is_zero())));
        let a = SubspaceArrangement::hyperplanes(2, forms).unwrap();
        for r in enumerate_regions(&a).unwrap() {
            let t = tail_cone(&a.region_system(&r.sign_vector).unwrap()).unwrap();
            prop_assert_eq!(t.is_zero(), r.bounded);
        }
    }
}
