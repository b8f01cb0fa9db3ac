//! Independent slow paths checked against the library's optimized ones.

use cliph_core::complex::FiltrationKind;
use cliph_core::graph::UnweightedGraph;
use cliph_core::pipeline::{clique_pipeline, power_pipeline};
use cliph_core::{build_clique_complex, build_power_complex, cliqueness_map};
use cliph_naive::graphs::{
    all_pairs_distances, component_count, count_cliques_by_subsets, dense_cliqueness_pairs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gnp(n: u32, p: f64, seed: u64) -> UnweightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = UnweightedGraph::new(n as usize);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn sparse_similarity_map_matches_dense_enumeration() {
    for seed in 0..30u64 {
        let n = 5 + (seed % 9) as u32;
        let p = [0.15, 0.4, 0.8][(seed % 3) as usize];
        let g = gnp(n, p, seed);
        let sparse = cliqueness_map(&g);
        let dense = dense_cliqueness_pairs(&g);
        assert_eq!(sparse.pairs(), dense.as_slice(), "seed={seed}");
    }
}

#[test]
fn clique_complex_size_matches_subset_enumeration() {
    for seed in 100..115u64 {
        let n = 5 + (seed % 6) as u32;
        let g = gnp(n, 0.5, seed);
        for max_dim in [0usize, 1, 2, 3] {
            let fc = build_clique_complex(&g, max_dim);
            // The builder keeps one extra dimension so deaths are visible.
            let by_subsets = count_cliques_by_subsets(&g, max_dim + 2);
            assert_eq!(fc.len(), by_subsets, "seed={seed} max_dim={max_dim}");
        }
    }
}

#[test]
fn power_skeleton_values_are_shortest_path_lengths() {
    for seed in 200..215u64 {
        let n = 6 + (seed % 5) as u32;
        let g = gnp(n, 0.3, seed);
        let fw = all_pairs_distances(&g);
        let fc = build_power_complex(&g, 1);
        for i in 0..fc.len() as u32 {
            let s = fc.simplex(i);
            match s.vertices() {
                [v] => assert_eq!(fc.value(i), cliph_core::ratio::rat(0, 1), "vertex {v}"),
                [u, v] => {
                    let d = fw[*u as usize][*v as usize]
                        .expect("cross-component pairs never enter the complex");
                    assert_eq!(fc.value(i), cliph_core::ratio::rat(d as i64, 1));
                }
                _ => {}
            }
        }
    }
}

#[test]
fn essential_component_counts_match_union_find() {
    for seed in 300..330u64 {
        let n = 6 + (seed % 8) as u32;
        let p = [0.1, 0.25][(seed % 2) as usize];
        let g = gnp(n, p, seed);
        let components = component_count(&g);
        let clique_h0 = &clique_pipeline(&g, 0, true)[0];
        let power_h0 = &power_pipeline(&g, 0, true)[0];
        assert_eq!(clique_h0.essential_count(), components, "seed={seed}");
        assert_eq!(power_h0.essential_count(), components, "seed={seed}");
    }
}

#[test]
fn betti_zero_matches_union_find() {
    use cliph_core::persistence::betti_numbers;
    for seed in 400..420u64 {
        let n = 5 + (seed % 8) as u32;
        let g = gnp(n, 0.2, seed);
        let fc = build_clique_complex(&g, 1);
        assert_eq!(betti_numbers(&fc, 0)[0], component_count(&g), "seed={seed}");
    }
}

#[test]
fn power_value_caps_out_at_diameter_times_kind() {
    // Complexes from the two conventions share no accidental values: the
    // similarity filtration stays in [0, 1], the distance one in integers.
    let g = gnp(9, 0.35, 77);
    let (active, _) = g.remove_isolated_vertices();
    let w = cliqueness_map(&active);
    for &(_, _, weight) in w.pairs() {
        assert!(weight > cliph_core::ratio::rat(0, 1));
        assert!(weight <= cliph_core::ratio::rat(1, 1));
    }
    let fc = build_power_complex(&g, 1);
    assert_eq!(fc.kind(), FiltrationKind::Power);
    for i in 0..fc.len() as u32 {
        assert!(fc.value(i).is_integer());
    }
}
