//! Seeded graph generators: canonical fixtures plus the random families the
//! experiment suites sample from.
//!
//! Randomness comes from ChaCha8 seeded with the caller's 64-bit seed; each
//! purpose draws from its own stream, so generated graphs are reproducible
//! across platforms and unaffected by unrelated draws.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::UnweightedGraph;

const STREAM_PLACEMENT: u64 = 0;
const STREAM_EDGES: u64 = 1;
const STREAM_EDIT: u64 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct SbmSpec {
    pub block_sizes: Vec<usize>,
    pub p_in: f64,
    pub p_out: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CircleRggSpec {
    pub n: usize,
    /// Euclidean chord-length threshold.
    pub radius: f64,
    pub seed: u64,
}

/// Stochastic block model: independent edge coins, `p_in` within a block and
/// `p_out` across blocks.
pub fn sample_sbm(spec: &SbmSpec) -> UnweightedGraph {
    assert!(!spec.block_sizes.is_empty(), "at least one block");
    assert!((0.0..=1.0).contains(&spec.p_in) && (0.0..=1.0).contains(&spec.p_out));
    let n: usize = spec.block_sizes.iter().sum();
    let mut block = Vec::with_capacity(n);
    for (b, &size) in spec.block_sizes.iter().enumerate() {
        block.extend(core::iter::repeat_n(b, size));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(STREAM_EDGES);
    let mut g = UnweightedGraph::new(n);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            let p = if block[u as usize] == block[v as usize] { spec.p_in } else { spec.p_out };
            if rng.gen::<f64>() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform points on the unit circle, joined when the chord length is at
/// most `radius`. Coordinates are returned for plotting.
pub fn sample_circle_rgg(spec: &CircleRggSpec) -> (UnweightedGraph, Vec<(f64, f64)>) {
    assert!(spec.n >= 1 && spec.radius > 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(STREAM_PLACEMENT);
    let coords: Vec<(f64, f64)> = (0..spec.n)
        .map(|_| {
            let theta = rng.gen::<f64>() * core::f64::consts::TAU;
            (libm::cos(theta), libm::sin(theta))
        })
        .collect();
    let mut g = UnweightedGraph::new(spec.n);
    let r2 = spec.radius * spec.radius;
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            let dx = coords[u].0 - coords[v].0;
            let dy = coords[u].1 - coords[v].1;
            if dx * dx + dy * dy <= r2 {
                g.add_edge(u as u32, v as u32);
            }
        }
    }
    (g, coords)
}

/// Adds one uniformly chosen absent edge; errors when the graph is complete.
pub fn add_random_edge(g: &UnweightedGraph, seed: u64) -> Result<UnweightedGraph, Error> {
    let n = g.n();
    let absent = n * n.saturating_sub(1) / 2 - g.edge_count();
    if absent == 0 {
        return Err(Error::CompleteGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(STREAM_EDIT);
    let target = rng.gen_range(0..absent);
    let mut seen = 0usize;
    let mut out = g.clone();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !g.has_edge(u, v) {
                if seen == target {
                    out.add_edge(u, v);
                    return Ok(out);
                }
                seen += 1;
            }
        }
    }
    unreachable!("absent-pair count disagrees with the scan")
}

/// Flips the presence of one uniformly chosen vertex pair, so the result is
/// always at unweighted distance 1 from the input.
pub fn toggle_random_pair(g: &UnweightedGraph, seed: u64) -> UnweightedGraph {
    let n = g.n() as u32;
    assert!(n >= 2, "toggling needs at least one pair");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(STREAM_EDIT);
    let total = u64::from(n) * u64::from(n - 1) / 2;
    let mut k = rng.gen_range(0..total);
    let mut pair = (0, 1);
    for u in 0..n {
        let row = u64::from(n - u - 1);
        if k < row {
            pair = (u, u + 1 + k as u32);
            break;
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

/// Deterministic named fixtures, e.g. `single_clique(5)`, `cycle(6)`,
/// `dense_cycle(20, 3)`, `fig4_a`.
pub fn fixture(name: &str) -> Result<UnweightedGraph, Error> {
    let full = name.trim();
    let unknown = || Error::UnknownFixture { name: full.to_string() };
    let (base, args) = match full.split_once('(') {
        None => (full, Vec::new()),
        Some((base, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let args: Result<Vec<usize>, _> =
                inner.split(',').map(|a| a.trim().parse::<usize>()).collect();
            (base.trim(), args.map_err(|_| unknown())?)
        }
    };
    let arg = |i: usize| -> Result<usize, Error> { args.get(i).copied().ok_or_else(unknown) };
    match (base, args.len()) {
        ("single_clique", 1) => {
            let k = arg(0)?;
            require(k >= 1, unknown)?;
            Ok(complete_block(k, 0, k))
        }
        ("two_cliques", 1) => {
            let k = arg(0)?;
            require(k >= 1, unknown)?;
            let mut g = UnweightedGraph::new(2 * k);
            add_clique(&mut g, 0, k);
            add_clique(&mut g, k, k);
            Ok(g)
        }
        ("bridged_cliques", 1) => {
            let k = arg(0)?;
            require(k >= 1, unknown)?;
            let mut g = UnweightedGraph::new(2 * k);
            add_clique(&mut g, 0, k);
            add_clique(&mut g, k, k);
            g.add_edge(k as u32 - 1, k as u32);
            Ok(g)
        }
        ("cycle", 1) => {
            let n = arg(0)?;
            require(n >= 3, unknown)?;
            Ok(UnweightedGraph::from_edges(
                n,
                (0..n as u32).map(|i| (i, (i + 1) % n as u32)),
            ))
        }
        ("dense_cycle", 2) => dense_cycle(arg(0)?, arg(1)?, unknown),
        ("dense_cycle_with_chord", 2) => {
            let (n, s) = (arg(0)?, arg(1)?);
            let mut g = dense_cycle(n, s, unknown)?;
            let chord = (0u32, (n / 2) as u32);
            require(!g.has_edge(chord.0, chord.1), unknown)?;
            g.add_edge(chord.0, chord.1);
            Ok(g)
        }
        ("fig4_a", 0) => Ok(biclique_2_4(false)),
        ("fig4_b", 0) => Ok(biclique_2_4(true)),
        ("fig6_a", 0) => Ok(two_triangles(false)),
        ("fig6_b", 0) => Ok(two_triangles(true)),
        _ => Err(unknown()),
    }
}

fn require(cond: bool, err: impl Fn() -> Error) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(err())
    }
}

fn add_clique(g: &mut UnweightedGraph, start: usize, size: usize) {
    for u in start..start + size {
        for v in u + 1..start + size {
            g.add_edge(u as u32, v as u32);
        }
    }
}

fn complete_block(n: usize, start: usize, size: usize) -> UnweightedGraph {
    let mut g = UnweightedGraph::new(n);
    add_clique(&mut g, start, size);
    g
}

/// Cycle on `n` vertices with chords to the `s` nearest neighbors on each
/// side; needs `2s < n` so every listed pair is a distinct edge.
fn dense_cycle(
    n: usize,
    s: usize,
    unknown: impl Fn() -> Error,
) -> Result<UnweightedGraph, Error> {
    require(s >= 1 && 2 * s < n, unknown)?;
    let mut g = UnweightedGraph::new(n);
    for i in 0..n as u32 {
        for d in 1..=s as u32 {
            g.add_edge(i, (i + d) % n as u32);
        }
    }
    Ok(g)
}

/// Complete bipartite graph on parts {0, 1} and {2..5}, optionally with the
/// top edge (0, 1) filled in.
fn biclique_2_4(top_edge: bool) -> UnweightedGraph {
    let mut g = UnweightedGraph::new(6);
    for top in 0..2u32 {
        for bottom in 2..6u32 {
            g.add_edge(top, bottom);
        }
    }
    if top_edge {
        g.add_edge(0, 1);
    }
    g
}

fn two_triangles(bridge: bool) -> UnweightedGraph {
    let mut g = UnweightedGraph::new(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
        g.add_edge(u, v);
    }
    if bridge {
        g.add_edge(2, 3);
    }
    g
}

/// Human-readable spec echo for run logs.
pub fn describe_sbm(spec: &SbmSpec) -> String {
    format!(
        "sbm blocks={:?} p_in={} p_out={} seed={}",
        spec.block_sizes, spec.p_in, spec.p_out, spec.seed
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_sizes() {
        let cases = [
            ("single_clique(5)", 5, 10),
            ("two_cliques(5)", 10, 20),
            ("bridged_cliques(5)", 10, 21),
            ("cycle(6)", 6, 6),
            ("dense_cycle(12, 2)", 12, 24),
            ("dense_cycle(20, 3)", 20, 60),
            ("dense_cycle_with_chord(20, 3)", 20, 61),
            ("fig4_a", 6, 8),
            ("fig4_b", 6, 9),
            ("fig6_a", 6, 6),
            ("fig6_b", 6, 7),
        ];
        for (name, n, m) in cases {
            let g = fixture(name).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{name}");
        }
    }

    #[test]
    fn fixture_rejects_unknowns_and_bad_args() {
        for bad in [
            "nonsense",
            "cycle(2)",
            "cycle(two)",
            "cycle",
            "dense_cycle(10, 5)",
            "single_clique(0)",
            "fig4_a(3)",
            "cycle(4",
        ] {
            assert!(fixture(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn sbm_degenerate_probabilities() {
        let k3 = sample_sbm(&SbmSpec { block_sizes: alloc::vec![3], p_in: 1.0, p_out: 1.0, seed: 1 });
        assert_eq!((k3.n(), k3.edge_count()), (3, 3));
        let split = sample_sbm(&SbmSpec {
            block_sizes: alloc::vec![2, 2],
            p_in: 1.0,
            p_out: 0.0,
            seed: 9,
        });
        assert_eq!(split.edge_count(), 2);
        assert!(split.has_edge(0, 1) && split.has_edge(2, 3));
    }

    #[test]
    fn sbm_is_seed_deterministic() {
        let spec = SbmSpec { block_sizes: alloc::vec![10, 10], p_in: 0.5, p_out: 0.1, seed: 42 };
        assert_eq!(sample_sbm(&spec), sample_sbm(&spec));
        let other = SbmSpec { seed: 43, ..spec.clone() };
        assert_ne!(sample_sbm(&spec), sample_sbm(&other));
    }

    #[test]
    fn rgg_edge_rule() {
        let (pair, _) = sample_circle_rgg(&CircleRggSpec { n: 2, radius: 2.1, seed: 0 });
        assert_eq!(pair.edge_count(), 1);
        let (single, coords) = sample_circle_rgg(&CircleRggSpec { n: 1, radius: 0.3, seed: 0 });
        assert_eq!((single.n(), single.edge_count()), (1, 0));
        assert_eq!(coords.len(), 1);
        let (x, y) = coords[0];
        assert!((x * x + y * y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rgg_is_seed_deterministic() {
        let spec = CircleRggSpec { n: 50, radius: 0.25, seed: 7 };
        let (a, ca) = sample_circle_rgg(&spec);
        let (b, cb) = sample_circle_rgg(&spec);
        assert_eq!(a, b);
        assert_eq!(ca, cb);
    }

    #[test]
    fn toggling_flips_exactly_one_pair() {
        let g = fixture("cycle(9)").unwrap();
        let mut added = 0;
        let mut removed = 0;
        for seed in 0..60 {
            let h = toggle_random_pair(&g, seed);
            assert_eq!(h, toggle_random_pair(&g, seed));
            assert_eq!(crate::graph::distance_unweighted(&g, &h).unwrap(), 1);
            match h.edge_count() {
                10 => added += 1,
                8 => removed += 1,
                other => panic!("edge count {other}"),
            }
        }
        // Both directions of the toggle occur.
        assert!(added > 0 && removed > 0);
    }

    #[test]
    fn random_edge_addition() {
        let nearly = UnweightedGraph::from_edges(3, [(0, 1), (1, 2)]);
        let filled = add_random_edge(&nearly, 5).unwrap();
        assert_eq!(filled.edge_count(), 3);
        assert!(filled.has_edge(0, 2));
        let k5 = fixture("single_clique(5)").unwrap();
        assert!(matches!(add_random_edge(&k5, 0), Err(Error::CompleteGraph)));
        let c6 = fixture("cycle(6)").unwrap();
        let plus = add_random_edge(&c6, 11).unwrap();
        assert_eq!(plus.edge_count(), 7);
        assert_eq!(add_random_edge(&c6, 11).unwrap(), plus);
    }
}
