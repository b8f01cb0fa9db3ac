//! The cliqueness weighting: Jaccard index of closed neighborhoods, applied
//! to every vertex pair of the completed graph. Pairs weighted zero are
//! omitted, which keeps the weighted graph sparse; vertices further than two
//! steps apart have disjoint closed neighborhoods, so candidate pairs are
//! enumerated through neighbors of neighbors rather than all `n^2` pairs.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::graph::UnweightedGraph;
use crate::ratio::{rat, Rational};

/// Sparse positively-weighted graph over the full vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    /// Canonical `(u, v, w)` triples, `u < v`, sorted lexicographically, `w > 0`.
    pairs: Vec<(u32, u32, Rational)>,
    /// Neighbor lists of the positive-weight support graph.
    adj: Vec<Vec<u32>>,
}

impl WeightedGraph {
    /// Builds from positive-weight triples (any order, `u != v`; duplicates
    /// are a caller bug).
    pub fn from_pairs(n: usize, mut pairs: Vec<(u32, u32, Rational)>) -> Self {
        for p in pairs.iter_mut() {
            assert!((p.0 as usize) < n && (p.1 as usize) < n, "endpoint out of range");
            assert_ne!(p.0, p.1, "pair on a single vertex");
            assert!(p.2 > Rational::zero(), "weights must be positive");
            if p.0 > p.1 {
                *p = (p.1, p.0, p.2);
            }
        }
        pairs.sort_unstable_by_key(|&(u, v, _)| (u, v));
        for w in pairs.windows(2) {
            assert!((w[0].0, w[0].1) != (w[1].0, w[1].1), "duplicate pair");
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, _) in &pairs {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        WeightedGraph { n, pairs, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Sorted canonical triples.
    pub fn pairs(&self) -> &[(u32, u32, Rational)] {
        &self.pairs
    }

    /// Stored weight of a pair, or zero when the pair is absent.
    pub fn weight(&self, u: u32, v: u32) -> Rational {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        match self.pairs.binary_search_by_key(&(a, b), |&(x, y, _)| (x, y)) {
            Ok(i) => self.pairs[i].2,
            Err(_) => Rational::zero(),
        }
    }

    /// Neighbors in the positive-weight support graph, sorted.
    pub fn support_neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// The support as an unweighted graph.
    pub fn support_graph(&self) -> UnweightedGraph {
        UnweightedGraph::from_edges(self.n, self.pairs.iter().map(|&(u, v, _)| (u, v)))
    }
}

/// Jaccard index of the closed neighborhoods of two distinct vertices.
pub fn cliqueness_weight(g: &UnweightedGraph, u: u32, v: u32) -> Result<Rational, Error> {
    if u == v {
        return Err(Error::SameVertex { vertex: u });
    }
    let nu = g.closed_neighborhood(u)?;
    let nv = g.closed_neighborhood(v)?;
    Ok(jaccard(&nu.members, &nv.members))
}

fn jaccard(a: &[u32], b: &[u32]) -> Rational {
    let mut inter = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                inter += 1;
                i += 1;
                j += 1;
            }
        }
    }
    let union = a.len() + b.len() - inter;
    rat(inter as i64, union as i64)
}

/// Maps an unweighted graph to its cliqueness-weighted completion, storing
/// exactly the pairs with positive weight. The vertex set is unchanged;
/// isolated vertices simply contribute no pairs.
pub fn cliqueness_map(g: &UnweightedGraph) -> WeightedGraph {
    let n = g.n();
    let mut pairs: Vec<(u32, u32, Rational)> = Vec::new();
    let mut seen = vec![false; n];
    let mut candidates: Vec<u32> = Vec::new();
    let mut neighborhoods: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..n as u32 {
        neighborhoods.push(g.closed_neighborhood(v).expect("vertex in range").members);
    }
    for u in 0..n as u32 {
        // Positive weight needs a shared closed neighborhood member, which
        // bounds the partner distance by two.
        candidates.clear();
        for &w in g.neighbors(u) {
            for &x in g.neighbors(w).iter().chain(core::iter::once(&w)) {
                if x > u && !seen[x as usize] {
                    seen[x as usize] = true;
                    candidates.push(x);
                }
            }
        }
        for &v in &candidates {
            seen[v as usize] = false;
            let w = jaccard(&neighborhoods[u as usize], &neighborhoods[v as usize]);
            debug_assert!(w > Rational::zero(), "distance-2 candidates share a neighbor");
            pairs.push((u, v, w));
        }
    }
    WeightedGraph::from_pairs(n, pairs)
}

/// Max absolute weight difference over all vertex pairs; absent pairs count
/// as zero-weight.
pub fn distance_weighted(w1: &WeightedGraph, w2: &WeightedGraph) -> Result<Rational, Error> {
    if w1.n() != w2.n() {
        return Err(Error::VertexSetMismatch { left: w1.n(), right: w2.n() });
    }
    let mut best = Rational::zero();
    let (a, b) = (w1.pairs(), w2.pairs());
    let (mut i, mut j) = (0usize, 0usize);
    loop {
        let diff = match (a.get(i), b.get(j)) {
            (Some(&(ua, va, wa)), Some(&(ub, vb, wb))) => match (ua, va).cmp(&(ub, vb)) {
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                    wa - wb
                }
                core::cmp::Ordering::Less => {
                    i += 1;
                    wa
                }
                core::cmp::Ordering::Greater => {
                    j += 1;
                    wb
                }
            },
            (Some(&(_, _, wa)), None) => {
                i += 1;
                wa
            }
            (None, Some(&(_, _, wb))) => {
                j += 1;
                wb
            }
            (None, None) => break,
        };
        let diff = if diff < Rational::zero() { -diff } else { diff };
        best = best.max(diff);
    }
    Ok(best)
}

/// Union of the positive supports of two same-vertex-set weighted graphs, as
/// an unweighted graph. Complexes built over it share a simplex set, which
/// the function distance requires.
pub fn union_support(w1: &WeightedGraph, w2: &WeightedGraph) -> Result<UnweightedGraph, Error> {
    if w1.n() != w2.n() {
        return Err(Error::VertexSetMismatch { left: w1.n(), right: w2.n() });
    }
    let mut g = UnweightedGraph::new(w1.n());
    for &(u, v, _) in w1.pairs().iter().chain(w2.pairs()) {
        g.add_edge(u, v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture;

    #[test]
    fn clique_pairs_have_weight_one() {
        let k5 = fixture("single_clique(5)").unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(cliqueness_weight(&k5, u, v).unwrap(), rat(1, 1));
            }
        }
    }

    #[test]
    fn bridge_edge_weight_is_one_fifth() {
        let g = fixture("bridged_cliques(5)").unwrap();
        // Bridge endpoints: last vertex of the first clique, first of the second.
        assert_eq!(cliqueness_weight(&g, 4, 5).unwrap(), rat(1, 5));
    }

    #[test]
    fn cycle_weights() {
        let c6 = fixture("cycle(6)").unwrap();
        assert_eq!(cliqueness_weight(&c6, 0, 1).unwrap(), rat(1, 2));
        assert_eq!(cliqueness_weight(&c6, 0, 3).unwrap(), rat(0, 1));
        assert_eq!(cliqueness_weight(&c6, 0, 2).unwrap(), rat(1, 5));
    }

    #[test]
    fn weight_rejects_bad_vertices() {
        let c6 = fixture("cycle(6)").unwrap();
        assert!(matches!(cliqueness_weight(&c6, 2, 2), Err(Error::SameVertex { .. })));
        assert!(matches!(cliqueness_weight(&c6, 0, 9), Err(Error::UnknownVertex { .. })));
    }

    #[test]
    fn map_of_disjoint_triangles_is_all_ones() {
        let g = fixture("fig6_a").unwrap();
        let w = cliqueness_map(&g);
        assert_eq!(w.pair_count(), 6);
        for &(_, _, wt) in w.pairs() {
            assert_eq!(wt, rat(1, 1));
        }
    }

    #[test]
    fn single_edge_maps_to_weight_one() {
        let g = UnweightedGraph::from_edges(2, [(0, 1)]);
        let w = cliqueness_map(&g);
        assert_eq!(w.pairs(), &[(0, 1, rat(1, 1))]);
    }

    #[test]
    fn map_keeps_isolated_vertices_in_the_vertex_set() {
        let mut g = UnweightedGraph::new(4);
        g.add_edge(1, 2);
        let w = cliqueness_map(&g);
        assert_eq!(w.n(), 4);
        assert_eq!(w.pairs(), &[(1, 2, rat(1, 1))]);
    }

    #[test]
    fn weighted_distance_merges_sparse_supports() {
        let a = WeightedGraph::from_pairs(2, vec![(0, 1, rat(1, 1))]);
        let b = WeightedGraph::from_pairs(2, vec![(0, 1, rat(3, 5))]);
        assert_eq!(distance_weighted(&a, &b).unwrap(), rat(2, 5));
        assert_eq!(distance_weighted(&a, &a).unwrap(), rat(0, 1));
        let empty = WeightedGraph::from_pairs(2, Vec::new());
        assert_eq!(distance_weighted(&a, &empty).unwrap(), rat(1, 1));
        assert!(distance_weighted(&a, &WeightedGraph::from_pairs(3, Vec::new())).is_err());
    }

    #[test]
    fn union_support_contains_both_supports() {
        let a = WeightedGraph::from_pairs(3, vec![(0, 1, rat(1, 2))]);
        let b = WeightedGraph::from_pairs(3, vec![(1, 2, rat(1, 3))]);
        let u = union_support(&a, &b).unwrap();
        assert!(u.has_edge(0, 1) && u.has_edge(1, 2) && !u.has_edge(0, 2));
    }
}
