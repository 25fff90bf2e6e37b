use proptest::prelude::*;

use csl_core::perm::{affine_permutation, group_closure, Permutation};
use csl_core::regular_map::RotationMap;
use csl_core::train_track::{perron_eigen, TransitionMatrix, DEFAULT_TOL};
use csl_core::{biggs_map, Exec, FieldSpec};

const PRIME_POWERS: [u32; 7] = [4, 5, 7, 8, 9, 11, 13];

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn generators() -> impl Strategy<Value = Vec<Permutation>> {
    (1usize..=5).prop_flat_map(|d| prop::collection::vec(permutation(d), 1..=3))
}

fn factorial(d: usize) -> usize {
    (1..=d).product()
}

fn primitive_matrix() -> impl Strategy<Value = TransitionMatrix> {
    (1usize..=4)
        .prop_flat_map(|d| prop::collection::vec(prop::collection::vec(0u64..=3, d), d))
        .prop_map(|rows| TransitionMatrix::from_rows(rows).unwrap())
        .prop_filter("primitive", TransitionMatrix::is_primitive)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn closure_is_a_group(gens in generators()) {
        let g = group_closure(gens.clone()).unwrap();
        let d = g.degree();
        prop_assert!(g.contains(&Permutation::identity(d)));
        prop_assert_eq!(factorial(d) % g.order(), 0);
        for x in g.elements().iter().take(8) {
            prop_assert!(g.contains(&x.inverse()));
            for y in &gens {
                prop_assert!(g.contains(&x.then(y)));
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order(gens in generators()) {
        let g = group_closure(gens).unwrap();
        for orbit in g.orbits() {
            prop_assert_eq!(g.order() % orbit.len(), 0);
            prop_assert_eq!(orbit.len() * g.stabilizer_order(orbit[0]), g.order());
        }
    }

    #[test]
    fn transitivity_is_an_inclusive_hierarchy(gens in generators()) {
        let g = group_closure(gens).unwrap();
        let top = g.transitivity_degree();
        for k in 1..=g.degree() {
            let t = g.is_k_transitive(k).unwrap();
            prop_assert_eq!(t, k <= top);
            prop_assert_eq!(t, g.is_k_transitive_literal(k, Exec::Sequential).unwrap());
        }
    }

    #[test]
    fn biggs_rotation_invariants(idx in 0usize..PRIME_POWERS.len(), s_seed in 0usize..1000, t_seed in 0usize..1000) {
        let n = PRIME_POWERS[idx];
        let spec = FieldSpec::of_order(n).unwrap();
        let map = biggs_map(&spec).unwrap();
        let n = n as usize;
        prop_assert_eq!(map.dart_count(), n * (n - 1));
        for d in 0..map.dart_count() {
            let a = map.alpha().apply(d);
            prop_assert!(a != d);
            prop_assert_eq!(map.alpha().apply(a), d);
        }
        let faces = map.faces();
        prop_assert_eq!(faces.len(), n);
        prop_assert!(faces.iter().all(|f| f.len() == n - 1));
        prop_assert!(map.face_adjacency_complete());

        let (s, t) = (1 + s_seed % (n - 1), t_seed % n);
        prop_assert!(map.check_affine_automorphism(&spec, s, t).unwrap().holds());
    }

    #[test]
    fn relabeled_maps_keep_their_invariants(idx in 0usize..4, seed in any::<u64>()) {
        let n = [4u32, 5, 7, 8][idx];
        let spec = FieldSpec::of_order(n).unwrap();
        let map = biggs_map(&spec).unwrap();
        // conjugate both permutations by a pseudo-random dart relabeling
        let darts = map.dart_count();
        let mut images: Vec<usize> = (0..darts).collect();
        let mut state = seed | 1;
        for i in (1..darts).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            images.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let relabel = Permutation::from_images(images).unwrap();
        let inv = relabel.inverse();
        let conj = |p: &Permutation| inv.then(p).then(&relabel);
        let other = RotationMap::new(conj(map.alpha()), conj(map.phi())).unwrap();
        let (a, b) = (map.summary(), other.summary());
        prop_assert_eq!((a.vertices, a.edges, a.faces, a.genus), (b.vertices, b.edges, b.faces, b.genus));
        prop_assert!(other.face_adjacency_complete());
    }

    #[test]
    fn perron_vector_is_positive(m in primitive_matrix()) {
        let e = perron_eigen(&m, DEFAULT_TOL).unwrap();
        prop_assert!(e.vector.iter().all(|&x| x > 0.0));
        prop_assert_eq!(*e.vector.last().unwrap(), 1.0);
        let scale = e.vector.iter().fold(0.0f64, |a, &x| a.max(x));
        prop_assert!(e.residual <= DEFAULT_TOL * scale);
    }

    #[test]
    fn transpose_keeps_the_perron_root(m in primitive_matrix()) {
        let a = perron_eigen(&m, DEFAULT_TOL).unwrap().lambda;
        let b = perron_eigen(&m.transpose(), DEFAULT_TOL).unwrap().lambda;
        prop_assert!((a - b).abs() <= 2.0 * DEFAULT_TOL, "{} vs {}", a, b);
    }
}

#[test]
fn affine_face_action_matches_perm_module() {
    for n in [5u32, 7, 8] {
        let spec = FieldSpec::of_order(n).unwrap();
        let g = csl_core::perm::affine_group(&spec);
        for s in 1..n as usize {
            for t in 0..n as usize {
                assert!(g.contains(&affine_permutation(&spec, s, t)));
            }
        }
    }
}
