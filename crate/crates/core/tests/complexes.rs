use gvpoly::complexes::*;
use gvpoly::exact::scalar::ivec;
use gvpoly::exact::Vector;
use gvpoly::fixtures;
use proptest::prelude::*;

fn fan_fixtures() -> Vec<(&'static str, Fan)> {
    vec![
        ("segment", fixtures::segment_fan()),
        ("projective_plane", fixtures::projective_plane_fan()),
        ("quadrant", fixtures::quadrant_fan()),
        ("hirzebruch", fixtures::hirzebruch_fan()),
        ("octahedral", fixtures::octahedral_fan()),
        ("projective_space", fixtures::projective_space_fan()),
    ]
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Oracle: `v` lies in the open cone when solving `Σ c_j r_j = v` by
/// Cramer's rule gives only positive coefficients.
fn contains_strictly(fan: &Fan, cone: &[usize], v: &[gvpoly::exact::Scalar]) -> bool {
    let rays: Vec<Vector> = cone.iter().map(|&i| fan.rays()[i].clone()).collect();
    let d = gvpoly::exact::det_rows(&rays).unwrap();
    (0..rays.len()).all(|j| {
        let mut r = rays.clone();
        r[j] = v.to_vec();
        let c = gvpoly::exact::det_rows(&r).unwrap() / &d;
        c > num_traits::Zero::zero()
    })
}

#[test]
fn fixture_fans_validate() {
    for (name, f) in fan_fixtures() {
        let r = f.validate();
        assert!(r.is_ok(), "{name}: {r}");
    }
}

#[test]
fn missing_cone_is_reported() {
    let f = Fan::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[-1, -1])], vec![vec![0, 1], vec![1, 2]]).unwrap();
    let r = f.validate();
    assert!(!r.is_ok());
    assert!(r.to_string().contains("not complete"), "{r}");
}

#[test]
fn dependent_lambda_is_reported() {
    let f = fixtures::projective_plane_fan();
    let lambda = vec![ivec(&[1, 0]), ivec(&[2, 0]), ivec(&[0, 1])];
    let r = validate_characteristic(&f.complex(), 2, &lambda, Mode::Integer);
    assert!(r.to_string().contains("dependent on face"), "{r}");
}

#[test]
fn barycentric_subdivision_preserves_euler_characteristic() {
    let mut complexes: Vec<SimplicialComplex> = fan_fixtures().iter().map(|(_, f)| f.complex()).collect();
    complexes.extend((1..=4).map(SimplicialComplex::simplex_boundary));
    complexes.extend((1..=3).map(SimplicialComplex::simplex));
    complexes.push(SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap());
    for k in complexes {
        let sd = k.barycentric_subdivision();
        assert_eq!(sd.complex.euler_characteristic(), k.euler_characteristic(), "{:?}", k.facets());
    }
}

#[test]
fn incoming_indices_on_fixtures() {
    for (name, f) in fan_fixtures() {
        let n = f.dim();
        for seed in 0..5 {
            let v = random_generic_vector(&f, seed).unwrap();
            let mut zero = 0;
            for c in f.cones() {
                let idx = incoming_index(&f, c, &v).unwrap();
                assert!(idx.index <= n);
                assert_eq!(idx.index, idx.incoming.len());
                assert!(is_subset(&idx.incoming, c));
                if contains_strictly(&f, c, &v) {
                    assert_eq!(idx.index, n, "{name}: the cone containing v");
                }
                if idx.index == 0 {
                    zero += 1;
                }
            }
            assert_eq!(zero, 1, "{name} seed {seed}");
        }
    }
}

#[test]
fn cell_vector_is_independent_of_v() {
    for (name, f) in fan_fixtures() {
        let reference = cell_vector(&f, &generic_vector(&f).unwrap()).unwrap();
        assert_eq!(reference.iter().sum::<usize>(), f.cones().len(), "{name}");
        for seed in 1..=5 {
            let v = random_generic_vector(&f, seed).unwrap();
            assert_eq!(cell_vector(&f, &v).unwrap(), reference, "{name} seed {seed}");
        }
    }
}

#[test]
fn non_generic_vector_names_the_wall() {
    let f = fixtures::projective_plane_fan();
    let e = incoming_index(&f, &[0, 1], &ivec(&[1, 0])).unwrap_err();
    assert_eq!(e.to_string(), "vector is not generic: it lies on the wall spanned by rays {1} of cone {1,2}");
}

#[test]
fn dual_blocks_reverse_inclusion() {
    for (name, f) in fan_fixtures().into_iter().take(5) {
        let k = f.complex();
        let d = DualComplex::new(k.clone());
        let mut faces = k.faces();
        faces.insert(0, Vec::new());
        for a in &faces {
            for b in &faces {
                let contains = d.block_contains(a, b).unwrap();
                assert_eq!(contains, is_subset(a, b), "{name}: {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn orientation_signs_match_determinants() {
    for (name, f) in fan_fixtures() {
        let s = f.orientation().unwrap();
        for c in f.cones() {
            assert_eq!(s.sign(c).unwrap(), f.cone_sign(c), "{name} {c:?}");
        }
        let flipped = s.flipped();
        for c in f.cones() {
            assert_eq!(flipped.sign(c).unwrap(), -s.sign(c).unwrap());
        }
    }
}

#[test]
fn unimodularity_in_integer_mode() {
    let f = Fan::new(2, vec![ivec(&[1, 0]), ivec(&[1, 2]), ivec(&[-1, -1])], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
        .unwrap();
    assert!(f.validate().is_ok());
    assert!(CharacteristicPair::from_fan(f.clone(), None, Mode::Integer).is_err());
    let p = CharacteristicPair::from_fan(f, None, Mode::Real).unwrap();
    assert_eq!(p.facet_determinant(&[0, 1]).unwrap(), ivec(&[2])[0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_generic_vectors_are_generic(seed in any::<u64>(), which in 0usize..6) {
        let (_, f) = fan_fixtures().swap_remove(which);
        let v = random_generic_vector(&f, seed).unwrap();
        let cells = cell_vector(&f, &v).unwrap();
        prop_assert_eq!(cells, cell_vector(&f, &generic_vector(&f).unwrap()).unwrap());
    }

    #[test]
    fn subdivision_euler_characteristic(facets in prop::collection::vec(prop::collection::btree_set(0usize..6, 1..4), 1..6)) {
        let facets: Vec<Face> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
        let k = SimplicialComplex::from_faces(6, facets).unwrap();
        prop_assert_eq!(k.barycentric_subdivision().complex.euler_characteristic(), k.euler_characteristic());
    }
}
