//! Property tests over randomly generated graphs and rationals.

use cliph_core::graph::UnweightedGraph;
use cliph_core::ratio::{parse_rational, rat};
use cliph_core::{cliqueness_map, cliqueness_weight, distance_weighted};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = UnweightedGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::ANY, pairs).prop_map(move |bits| {
            let mut g = UnweightedGraph::new(n);
            let mut k = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weight_is_symmetric_and_bounded(g in arb_graph(10)) {
        let n = g.n() as u32;
        for u in 0..n {
            for v in u + 1..n {
                let a = cliqueness_weight(&g, u, v).unwrap();
                let b = cliqueness_weight(&g, v, u).unwrap();
                prop_assert_eq!(a, b);
                prop_assert!(a >= rat(0, 1) && a <= rat(1, 1));
                if g.has_edge(u, v) {
                    prop_assert!(a > rat(0, 1), "adjacent pairs share both endpoints");
                }
            }
        }
    }

    #[test]
    fn weight_distance_is_a_metric(
        (g1, g2, g3) in (2..=8usize).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            let edges = move || proptest::collection::vec(proptest::bool::ANY, pairs);
            (edges(), edges(), edges()).prop_map(move |(a, b, c)| {
                let build = |bits: Vec<bool>| {
                    let mut g = UnweightedGraph::new(n);
                    let mut k = 0;
                    for u in 0..n as u32 {
                        for v in u + 1..n as u32 {
                            if bits[k] { g.add_edge(u, v); }
                            k += 1;
                        }
                    }
                    g
                };
                (build(a), build(b), build(c))
            })
        })
    ) {
        let w1 = cliqueness_map(&g1);
        let w2 = cliqueness_map(&g2);
        let w3 = cliqueness_map(&g3);
        let d12 = distance_weighted(&w1, &w2).unwrap();
        let d21 = distance_weighted(&w2, &w1).unwrap();
        let d13 = distance_weighted(&w1, &w3).unwrap();
        let d23 = distance_weighted(&w2, &w3).unwrap();
        prop_assert_eq!(d12, d21);
        prop_assert_eq!(distance_weighted(&w1, &w1).unwrap(), rat(0, 1));
        prop_assert!(d13 <= d12 + d23);
    }

    #[test]
    fn rational_display_round_trips(num in -1000i64..1000, den in 1i64..1000) {
        let r = rat(num, den);
        let shown = format!("{r}");
        prop_assert_eq!(parse_rational(&shown).unwrap(), r);
    }
}
