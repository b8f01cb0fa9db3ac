//! Single-edge edits move cliqueness diagrams by a bounded amount: the
//! bottleneck is dominated by the function distance, which is dominated by the
//! weight distance, which is dominated by the edit distance.

use cliph_core::graph::UnweightedGraph;
use cliph_core::persistence::{diagram_from_pairing, finalize_diagram, reduce_and_pair};
use cliph_core::ratio::rat;
use cliph_core::{
    bottleneck_distance, build_filtered_complex_on, cliqueness_map, distance_functions,
    distance_unweighted, distance_weighted, union_support,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gnp(n: u32, p: f64, rng: &mut ChaCha8Rng) -> UnweightedGraph {
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

/// Flips the presence of one uniformly chosen vertex pair.
fn toggle_random_pair(g: &UnweightedGraph, rng: &mut ChaCha8Rng) -> UnweightedGraph {
    let n = g.n() as u32;
    assert!(n >= 2);
    let total = (n as u64) * (n as u64 - 1) / 2;
    let mut k = rng.gen_range(0..total);
    let mut pair = (0, 1);
    'outer: for u in 0..n {
        let row = (n - u - 1) as u64;
        if k < row {
            pair = (u, u + 1 + k as u32);
            break 'outer;
        }
        k -= row;
    }
    let (u, v) = pair;
    let mut edges: Vec<(u32, u32)> = g.edges().collect();
    if g.has_edge(u, v) {
        edges.retain(|&e| e != (u, v));
    } else {
        edges.push((u, v));
    }
    UnweightedGraph::from_edges(g.n(), edges)
}

#[test]
fn edit_distance_dominates_the_whole_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..40 {
        let n = 8 + (trial % 9) as u32;
        let p = [0.2, 0.35, 0.55][trial % 3];
        let g = gnp(n, p, &mut rng);
        let h = toggle_random_pair(&g, &mut rng);

        let du = distance_unweighted(&g, &h).unwrap();
        assert_eq!(du, 1, "exactly one pair differs");

        let w1 = cliqueness_map(&g);
        let w2 = cliqueness_map(&h);
        let dw = distance_weighted(&w1, &w2).unwrap();
        assert!(dw <= rat(du as i64, 1), "trial {trial}: {dw} > {du}");

        let common = union_support(&w1, &w2).unwrap();
        let f1 = build_filtered_complex_on(&common, &w1, 1);
        let f2 = build_filtered_complex_on(&common, &w2, 1);
        let dk = distance_functions(&f1, &f2).unwrap();
        assert!(dk <= dw, "trial {trial}: {dk} > {dw}");

        let p1 = reduce_and_pair(&f1);
        let p2 = reduce_and_pair(&f2);
        for dim in 0..=1u32 {
            let a = finalize_diagram(&diagram_from_pairing(&f1, &p1, dim), true);
            let b = finalize_diagram(&diagram_from_pairing(&f2, &p2, dim), true);
            let bottleneck = bottleneck_distance(&a, &b)
                .unwrap()
                .distance
                .expect("common complex forces equal essential counts");
            assert!(
                bottleneck <= dk,
                "trial {trial} dim {dim}: {bottleneck} > {dk}"
            );
            assert!(bottleneck <= rat(1, 1));
        }
    }
}
