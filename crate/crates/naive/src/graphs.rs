//! Slow reference computations on graphs: dense similarity weights, subset
//! clique counting, Floyd-Warshall distances, union-find components.

use std::collections::HashSet;

use cliph_core::graph::UnweightedGraph;
use cliph_core::ratio::{rat, Rational};

/// Closed-neighborhood overlap weights for every vertex pair, by building the
/// two sets outright. Quadratic in the vertex count; only positive weights are
/// returned, canonically ordered.
pub fn dense_cliqueness_pairs(g: &UnweightedGraph) -> Vec<(u32, u32, Rational)> {
    let n = g.n() as u32;
    let closed: Vec<HashSet<u32>> = (0..n)
        .map(|v| {
            let mut s: HashSet<u32> = g.neighbors(v).iter().copied().collect();
            s.insert(v);
            s
        })
        .collect();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let inter = closed[u as usize].intersection(&closed[v as usize]).count();
            let union = closed[u as usize].union(&closed[v as usize]).count();
            if inter > 0 {
                out.push((u, v, rat(inter as i64, union as i64)));
            }
        }
    }
    out
}

/// Number of nonempty cliques with at most `max_size` vertices, found by
/// testing every vertex subset. Requires n <= 20.
pub fn count_cliques_by_subsets(g: &UnweightedGraph, max_size: usize) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset enumeration is exponential in n");
    let mut count = 0usize;
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) > max_size {
            continue;
        }
        let verts: Vec<u32> = (0..n as u32).filter(|v| mask >> v & 1 == 1).collect();
        let mut ok = true;
        'pairs: for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if !g.has_edge(verts[i], verts[j]) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            count += 1;
        }
    }
    count
}

/// All-pairs shortest path lengths by Floyd-Warshall; `None` for unreachable.
#[allow(clippy::needless_range_loop)]
pub fn all_pairs_distances(g: &UnweightedGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    for v in 0..n {
        dist[v][v] = Some(0);
    }
    for (u, v) in g.edges() {
        dist[u as usize][v as usize] = Some(1);
        dist[v as usize][u as usize] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = dist[i][k] else { continue };
            for j in 0..n {
                let Some(kj) = dist[k][j] else { continue };
                let through = ik + kj;
                if dist[i][j].is_none_or(|d| through < d) {
                    dist[i][j] = Some(through);
                }
            }
        }
    }
    dist
}

/// Plain union-find with path halving, no ranks.
pub struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the two classes; reports whether they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

/// Connected component count via union-find over the edge list.
pub fn component_count(g: &UnweightedGraph) -> usize {
    let mut uf = UnionFind::new(g.n());
    for (u, v) in g.edges() {
        uf.union(u as usize, v as usize);
    }
    uf.set_count()
}
