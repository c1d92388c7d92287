//! Property-based invariants: binomial identities, edge symmetry, the
//! metric axioms, relabeling round-trips, and path/distance agreement on
//! randomly drawn vertices.

use levelgraph::{binom, Count64, LevelParams, Relabeling, VertexSet};
use proptest::prelude::*;

fn arb_params() -> impl Strategy<Value = LevelParams> {
    (1u32..=20).prop_flat_map(|n| {
        (Just(n), 0..=(n - 1) / 2).prop_map(|(n, k)| LevelParams::new(n, k).unwrap())
    })
}

fn arb_vertex(params: LevelParams) -> impl Strategy<Value = VertexSet> {
    let n = params.n();
    prop_oneof![Just(params.k()), Just(params.large_size())].prop_flat_map(move |size| {
        Just((1..=n).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(move |pool| VertexSet::from_elements(n, &pool[..size as usize]).unwrap())
    })
}

fn arb_vertex_pair() -> impl Strategy<Value = (LevelParams, VertexSet, VertexSet)> {
    arb_params().prop_flat_map(|params| {
        (Just(params), arb_vertex(params), arb_vertex(params))
    })
}

fn arb_vertex_triple() -> impl Strategy<Value = (LevelParams, VertexSet, VertexSet, VertexSet)> {
    arb_params().prop_flat_map(|params| {
        (Just(params), arb_vertex(params), arb_vertex(params), arb_vertex(params))
    })
}

fn arb_small_triple() -> impl Strategy<Value = (LevelParams, VertexSet, VertexSet, VertexSet)> {
    arb_params().prop_flat_map(|params| {
        let small = || {
            let n = params.n();
            let k = params.k();
            Just((1..=n).collect::<Vec<u32>>())
                .prop_shuffle()
                .prop_map(move |pool| VertexSet::from_elements(n, &pool[..k as usize]).unwrap())
        };
        (Just(params), small(), small(), small())
    })
}

proptest! {
    #[test]
    fn binom_is_symmetric(a in 0i64..=60, b in 0i64..=60) {
        prop_assume!(b <= a);
        prop_assert_eq!(binom::<Count64>(a, b).unwrap(), binom::<Count64>(a, a - b).unwrap());
    }

    #[test]
    fn binom_satisfies_the_recurrence_at_all_boundaries(a in 1i64..=60, b in -3i64..=63) {
        let sum = binom::<u128>(a - 1, b - 1).unwrap() + binom::<u128>(a - 1, b).unwrap();
        prop_assert_eq!(binom::<u128>(a, b).unwrap(), sum);
    }

    #[test]
    fn edges_are_symmetric_with_full_overlap((params, a, b) in arb_vertex_pair()) {
        let forward = params.is_edge(&a, &b).unwrap();
        prop_assert_eq!(forward, params.is_edge(&b, &a).unwrap());
        if forward {
            prop_assert_eq!(a.intersection(&b).len(), a.len().min(b.len()));
        }
    }

    #[test]
    fn distance_identity_and_symmetry((params, a, b) in arb_vertex_pair()) {
        prop_assert_eq!(params.distance(&a, &a).unwrap(), 0);
        let forward = params.distance(&a, &b).unwrap();
        prop_assert_eq!(forward == 0, a == b);
        prop_assert_eq!(forward, params.distance(&b, &a).unwrap());
    }

    #[test]
    fn distance_parity_follows_the_levels((params, a, b) in arb_vertex_pair()) {
        let d = params.distance(&a, &b).unwrap();
        prop_assert_eq!(d % 2 == 0, a.len() == b.len());
    }

    #[test]
    fn distance_stays_within_the_diameter((params, a, b) in arb_vertex_pair()) {
        let d = params.distance(&a, &b).unwrap();
        prop_assert!(d <= 2 * params.radius() + 1);
    }

    #[test]
    fn triangle_inequality((params, a, b, c) in arb_vertex_triple()) {
        let ab = params.distance(&a, &b).unwrap();
        let bc = params.distance(&b, &c).unwrap();
        let ac = params.distance(&a, &c).unwrap();
        prop_assert!(ab + bc >= ac, "d({},{}) + d({},{}) = {} < d({},{}) = {}",
            a, b, b, c, ab + bc, a, c, ac);
    }

    #[test]
    fn edge_characterization((params, a, b) in arb_vertex_pair()) {
        prop_assert_eq!(
            params.distance(&a, &b).unwrap() == 1,
            params.is_edge(&a, &b).unwrap()
        );
    }

    #[test]
    fn overlap_counting_inequality((params, a, b, c) in arb_small_triple()) {
        // For k-sets: |A∩B| + |(B∩C)\A| never exceeds k + |(A∩C)\B|.
        let left = a.intersection(&b).len() + b.intersection(&c).difference(&a).len();
        let right = params.k() + a.intersection(&c).difference(&b).len();
        prop_assert!(left <= right);
    }

    #[test]
    fn relabeling_round_trips((params, a, b) in arb_vertex_pair()) {
        let relabeling = Relabeling::canonicalize(&a, &b);
        prop_assert_eq!(relabeling.apply_inverse(&relabeling.apply(&a)), a);
        prop_assert_eq!(relabeling.apply_inverse(&relabeling.apply(&b)), b);
        let overlap = a.intersection(&b);
        prop_assert_eq!(
            relabeling.apply(&overlap),
            VertexSet::interval(params.n(), 1, overlap.len())
        );
    }

    #[test]
    fn constructed_paths_witness_the_distance((params, a, b) in arb_vertex_pair()) {
        let path = params.shortest_path(&a, &b).unwrap();
        prop_assert_eq!(path.validate(), Ok(()));
        prop_assert_eq!(path.source(), &a);
        prop_assert_eq!(path.target(), &b);
        prop_assert_eq!(path.length(), params.distance(&a, &b).unwrap());
    }
}
