//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every tolerance is zero and every time budget is asserted.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use levelgraph::oracle::{
    verify_distance_formula, verify_layers, verify_metric_axioms, verify_paths, AdjacencyGraph,
    SampleMode,
};
use levelgraph::{binom, Count128, Count64, LayerIndex, LayerSide, LevelParams, VertexSet};

fn params(n: u32, k: u32) -> LevelParams {
    LevelParams::new(n, k).unwrap()
}

fn vertex_set(n: u32, elements: &[u32]) -> VertexSet {
    VertexSet::from_elements(n, elements).unwrap()
}

fn layer_contents(p: &LevelParams, side: LayerSide, index: u32) -> BTreeSet<VertexSet> {
    p.enumerate_layer(LayerIndex::new(side, index)).unwrap().into_iter().collect()
}

#[test]
fn criterion_1_worked_example_is_reproduced_exactly() {
    let start = Instant::now();
    let p = params(5, 2);

    let f: Vec<Count64> =
        (0..=5).map(|x| p.count_at_distance::<Count64>(x).unwrap()).collect();
    assert_eq!(f, vec![1, 3, 6, 6, 3, 1]);

    let expect = |lists: &[&[u32]]| -> BTreeSet<VertexSet> {
        lists.iter().map(|elements| vertex_set(5, elements)).collect()
    };
    assert_eq!(layer_contents(&p, LayerSide::Small, 0), expect(&[&[1, 2]]));
    assert_eq!(
        layer_contents(&p, LayerSide::Small, 1),
        expect(&[&[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[2, 5]])
    );
    assert_eq!(
        layer_contents(&p, LayerSide::Large, 0),
        expect(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]])
    );

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (worked example L(2,5), zero tolerance): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_distance_formula_equals_bfs_through_n_14() {
    let start = Instant::now();
    let mut pairs = 0u64;
    for n in 3..=14 {
        for p in LevelParams::all_for(n) {
            let report = verify_distance_formula(&p).unwrap();
            assert!(
                report.passed(),
                "{p}: {} mismatches, first {:?}",
                report.mismatches.len(),
                report.mismatches.first()
            );
            pairs += report.checked;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 2 (distance = BFS, {pairs} ordered pairs, zero mismatches): PASS in {elapsed:?}");
}

#[test]
fn criterion_3_constructed_paths_witness_every_distance_through_n_10() {
    let start = Instant::now();
    let mut pairs = 0u64;
    for n in 3..=10 {
        for p in LevelParams::all_for(n) {
            // Shape and BFS-length agreement for every ordered pair.
            let report = verify_paths(&p).unwrap();
            assert!(report.passed(), "{p}: {:?}", report.mismatches.first());
            pairs += report.checked;
            // And the length is exactly the closed-form distance.
            let mut vertices: Vec<VertexSet> =
                levelgraph::sets_of_size(n, p.k()).collect();
            vertices.extend(levelgraph::sets_of_size(n, p.large_size()));
            for a in &vertices {
                for b in &vertices {
                    let path = p.shortest_path(a, b).unwrap();
                    assert_eq!(path.length(), p.distance(a, b).unwrap(), "{p} {a} -> {b}");
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 3 (constructive paths, {pairs} ordered pairs, zero failures): PASS in {elapsed:?}");
}

#[test]
fn criterion_4_metric_axioms_exhaustive_and_sampled() {
    let start = Instant::now();
    let mut triples = 0u64;
    for n in 1..=10 {
        for p in LevelParams::all_for(n) {
            let report = verify_metric_axioms(&p, SampleMode::Exhaustive).unwrap();
            assert!(report.passed(), "{p}: {:?}", report.mismatches.first());
            triples += report.checked;
        }
    }
    for (n, k) in [(20, 4), (30, 9), (40, 13)] {
        let p = params(n, k);
        let report =
            verify_metric_axioms(&p, SampleMode::Sampled { count: 100_000, seed: 42 }).unwrap();
        assert!(report.passed(), "{p}: {:?}", report.mismatches.first());
        assert_eq!(report.checked, 100_000);
        triples += report.checked;
    }
    let elapsed = start.elapsed();
    println!("criterion 4 (metric axioms, {triples} triples, zero violations): PASS in {elapsed:?}");
}

#[test]
fn criterion_5_layer_counts_match_bfs_histograms_through_n_12() {
    let start = Instant::now();
    for n in 1..=12 {
        for p in LevelParams::all_for(n) {
            let report = verify_layers(&p).unwrap();
            assert!(report.passed(), "{p}: {:?}", report.mismatches.first());
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 5 (layer histograms and enumerations, zero tolerance): PASS in {elapsed:?}");
}

#[test]
fn criterion_6_layer_sum_identities_hold_exactly_through_n_40() {
    let start = Instant::now();
    let mut checked = 0u32;
    for n in 1..=40 {
        for p in LevelParams::all_for(n) {
            let report = p.verify_identities::<Count128>().unwrap();
            assert!(
                report.holds(),
                "{p}: binom = {:?}, sums = {:?}, {:?}",
                report.binomial,
                report.gamma_sum,
                report.delta_sum
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 6 (both identities, {checked} parameter sets, exact): PASS in {elapsed:?}");
}

#[test]
fn criterion_7_boundary_behavior() {
    let start = Instant::now();

    // k = 0 is accepted and gives the two-vertex, one-edge graph.
    let p = params(2, 0);
    let graph = AdjacencyGraph::build(&p).unwrap();
    assert_eq!((graph.vertex_count(), graph.edge_count()), (2, 1));
    let empty = VertexSet::empty(2);
    let full = VertexSet::full(2);
    assert_eq!(p.distance(&empty, &full).unwrap(), 1);
    assert_eq!(p.shortest_path(&full, &empty).unwrap().length(), 1);

    // 2k >= n is rejected by the library and exits the CLI with code 2.
    assert!(LevelParams::new(6, 3).is_err());
    let output = Command::new(env!("CARGO_BIN_EXE_levelgraph"))
        .args(["distance", "--n", "6", "--k", "3", "--a", "1,2,3", "--b", "4,5,6"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));

    // The extended binomial convention: layer sums taken verbatim (with
    // vacuous terms) equal re-indexed sums that drop them.
    for n in 1..=40u32 {
        for p in LevelParams::all_for(n) {
            let (k, large, gap) = (p.k() as i64, p.large_size() as i64, p.gap() as i64);
            for i in 0..=p.radius() {
                let lo = ((i as i64 - 1) * gap + 1).max(0);
                let hi = (i as i64 * gap).min(k);
                let mut gamma = 0u128;
                let mut delta = 0u128;
                for moved in lo..=hi {
                    gamma += binom::<u128>(k, k - moved).unwrap()
                        * binom::<u128>(large, moved).unwrap();
                    delta += binom::<u128>(k, k - moved).unwrap()
                        * binom::<u128>(large, gap + moved).unwrap();
                }
                assert_eq!(p.gamma::<u128>(i).unwrap(), gamma, "{p} layer {i}");
                assert_eq!(p.delta::<u128>(i).unwrap(), delta, "{p} layer {i}");
            }
        }
    }

    let elapsed = start.elapsed();
    println!("criterion 7 (boundary behavior and binomial convention): PASS in {elapsed:?}");
}
