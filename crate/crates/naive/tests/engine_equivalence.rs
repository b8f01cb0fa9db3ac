//! The fast reduction and the rank oracle must produce identical diagrams on
//! randomly sampled graphs, for every filtration kind.

use cliph_core::complex::FiltrationKind;
use cliph_core::graph::UnweightedGraph;
use cliph_core::pipeline::{clique_pipeline, cliqueness_pipeline, power_pipeline};
use cliph_naive::diagram::oracle_pipeline;
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

fn check(g: &UnweightedGraph, kind: FiltrationKind, max_dim: u32, tag: &str) {
    let engine = match kind {
        FiltrationKind::Cliqueness => cliqueness_pipeline(g, max_dim, true),
        FiltrationKind::Clique => clique_pipeline(g, max_dim, true),
        FiltrationKind::Power => power_pipeline(g, max_dim, true),
    };
    let oracle = oracle_pipeline(g, kind, max_dim);
    assert_eq!(engine.len(), oracle.len());
    for (e, o) in engine.iter().zip(&oracle) {
        assert!(
            e.same_points(o),
            "{tag} kind={} dim={}: engine {:?} vs oracle {:?}",
            kind.name(),
            e.dimension,
            e.points,
            o.points,
        );
    }
}

#[test]
fn random_graphs_up_to_dimension_two() {
    let kinds =
        [FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power];
    for seed in 0..36u64 {
        let n = 4 + (seed % 7) as u32;
        let p = [0.25, 0.45, 0.7][(seed % 3) as usize];
        let g = gnp(n, p, seed);
        for kind in kinds {
            check(&g, kind, 2, &format!("seed={seed} n={n} p={p}"));
        }
    }
}

#[test]
fn sparse_and_dense_extremes() {
    for (n, p, seed) in [(9, 0.05, 11u64), (8, 0.95, 12), (10, 1.0, 13), (7, 0.0, 14)] {
        let g = gnp(n, p, seed);
        for kind in
            [FiltrationKind::Cliqueness, FiltrationKind::Clique, FiltrationKind::Power]
        {
            check(&g, kind, 2, &format!("extreme n={n} p={p}"));
        }
    }
}
