//! Undirected, unweighted graphs on dense integer vertex ids.
//!
//! Adjacency is kept as sorted neighbor lists so neighborhood intersections
//! and unions run as linear merges.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnweightedGraph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

/// Closed neighborhood of a vertex: the vertex plus everything adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexNeighborhood {
    pub vertex: u32,
    /// Sorted; always contains `vertex`.
    pub members: Vec<u32>,
}

/// Result of [`parse_edge_list`]: the graph plus counts of dropped lines.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: UnweightedGraph,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

/// Graph diameter, with disconnected graphs reported explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    /// Disconnected; carries the largest diameter among the components.
    Disconnected { component_max: u32 },
}

impl UnweightedGraph {
    pub fn new(n: usize) -> Self {
        UnweightedGraph { adj: vec![Vec::new(); n], edge_count: 0, labels: None }
    }

    /// Builds from an edge iterator; duplicate edges are collapsed silently.
    /// Panics on self-loops or out-of-range endpoints (caller bug).
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = UnweightedGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g.debug_validate();
        g
    }

    /// Inserts an edge, returning false if it was already present.
    pub fn add_edge(&mut self, u: u32, v: u32) -> bool {
        assert_ne!(u, v, "self-loop rejected");
        assert!((u as usize) < self.n() && (v as usize) < self.n(), "endpoint out of range");
        let pos = match self.adj[u as usize].binary_search(&v) {
            Ok(_) => return false,
            Err(pos) => pos,
        };
        self.adj[u as usize].insert(pos, v);
        let pos = self.adj[v as usize].binary_search(&u).unwrap_err();
        self.adj[v as usize].insert(pos, u);
        self.edge_count += 1;
        true
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// All neighbor lists, indexed by vertex.
    pub fn neighbor_lists(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Canonical edges, smaller endpoint first, lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as u32;
            nbrs.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: u32) -> String {
        match &self.labels {
            Some(ls) => ls[v as usize].clone(),
            None => v.to_string(),
        }
    }

    fn check_vertex(&self, v: u32) -> Result<(), Error> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex { vertex: v, order: self.n() })
        }
    }

    pub fn closed_neighborhood(&self, v: u32) -> Result<VertexNeighborhood, Error> {
        self.check_vertex(v)?;
        let nbrs = &self.adj[v as usize];
        let mut members = Vec::with_capacity(nbrs.len() + 1);
        let mut inserted = false;
        for &u in nbrs {
            if !inserted && u > v {
                members.push(v);
                inserted = true;
            }
            members.push(u);
        }
        if !inserted {
            members.push(v);
        }
        Ok(VertexNeighborhood { vertex: v, members })
    }

    /// Drops degree-0 vertices and re-densifies ids. The second return value
    /// maps each new id to the old one it came from.
    pub fn remove_isolated_vertices(&self) -> (UnweightedGraph, Vec<u32>) {
        let kept: Vec<u32> =
            (0..self.n() as u32).filter(|&v| !self.adj[v as usize].is_empty()).collect();
        let mut new_id = vec![u32::MAX; self.n()];
        for (i, &old) in kept.iter().enumerate() {
            new_id[old as usize] = i as u32;
        }
        let mut g = UnweightedGraph::new(kept.len());
        g.adj = kept
            .iter()
            .map(|&old| self.adj[old as usize].iter().map(|&w| new_id[w as usize]).collect())
            .collect();
        g.edge_count = self.edge_count;
        g.labels = self
            .labels
            .as_ref()
            .map(|ls| kept.iter().map(|&old| ls[old as usize].clone()).collect());
        g.debug_validate();
        (g, kept)
    }

    /// Breadth-first distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        dist[src as usize] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graph power: same vertices, an edge wherever the distance is in `1..=k`.
    pub fn graph_power(&self, k: u32) -> Result<UnweightedGraph, Error> {
        if k < 1 {
            return Err(Error::InvalidPower);
        }
        let mut g = UnweightedGraph::new(self.n());
        g.labels = self.labels.clone();
        for src in 0..self.n() as u32 {
            let dist = self.bfs_distances(src);
            for v in src + 1..self.n() as u32 {
                let d = dist[v as usize];
                if d >= 1 && d <= k {
                    g.add_edge(src, v);
                }
            }
        }
        Ok(g)
    }

    pub fn diameter(&self) -> Diameter {
        let mut max_finite = 0u32;
        let mut disconnected = false;
        for src in 0..self.n() as u32 {
            for (v, &d) in self.bfs_distances(src).iter().enumerate() {
                if d == u32::MAX {
                    if v as u32 > src {
                        disconnected = true;
                    }
                } else if d > max_finite {
                    max_finite = d;
                }
            }
        }
        if disconnected {
            Diameter::Disconnected { component_max: max_finite }
        } else {
            Diameter::Finite(max_finite)
        }
    }

    /// Component id per vertex, numbered in first-seen order.
    pub fn components(&self) -> Vec<u32> {
        let mut comp = vec![u32::MAX; self.n()];
        let mut next = 0u32;
        let mut stack = Vec::new();
        for v in 0..self.n() as u32 {
            if comp[v as usize] != u32::MAX {
                continue;
            }
            comp[v as usize] = next;
            stack.push(v);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u as usize] {
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Relabels vertices: new id `perm[v]` for each old id `v`.
    pub fn permuted(&self, perm: &[u32]) -> UnweightedGraph {
        assert_eq!(perm.len(), self.n());
        let mut g = UnweightedGraph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u as usize], perm[v as usize]);
        }
        g.debug_validate();
        g
    }

    /// Invariant sweep: sorted symmetric loop-free adjacency, consistent count.
    pub fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            let mut half_edges = 0usize;
            for (u, nbrs) in self.adj.iter().enumerate() {
                half_edges += nbrs.len();
                for pair in nbrs.windows(2) {
                    assert!(pair[0] < pair[1], "neighbor list not strictly sorted");
                }
                for &v in nbrs {
                    assert_ne!(v as usize, u, "self-loop present");
                    assert!(
                        self.adj[v as usize].binary_search(&(u as u32)).is_ok(),
                        "adjacency not symmetric"
                    );
                }
            }
            assert_eq!(half_edges, 2 * self.edge_count, "edge count out of sync");
            if let Some(ls) = &self.labels {
                assert_eq!(ls.len(), self.n(), "label table length mismatch");
            }
        }
    }
}

/// Parses edge-list text: one edge per line as two whitespace-separated
/// tokens; `#` starts a comment line; blank lines are skipped. Tokens become
/// dense ids in first-seen order and are kept as labels. Self-loops and
/// duplicate edges are dropped and counted.
pub fn parse_edge_list(text: &str) -> Result<LoadedGraph, Error> {
    let mut ids: HashMap<&str, u32> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut self_loops = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: idx + 1,
                    reason: "expected exactly two vertex tokens".to_string(),
                })
            }
        };
        let mut id_of = |tok| {
            *ids.entry(tok).or_insert_with(|| {
                labels.push(String::from(tok));
                (labels.len() - 1) as u32
            })
        };
        let u = id_of(a);
        let v = id_of(b);
        if u == v {
            self_loops += 1;
        } else {
            edges.push((u.min(v), u.max(v)));
        }
    }
    let mut graph = UnweightedGraph::new(labels.len());
    graph.labels = Some(labels);
    let mut duplicates = 0usize;
    for (u, v) in edges {
        if !graph.add_edge(u, v) {
            duplicates += 1;
        }
    }
    graph.debug_validate();
    Ok(LoadedGraph { graph, self_loops_dropped: self_loops, duplicates_dropped: duplicates })
}

/// Indicator distance on same-vertex-set graphs: 0 when the edge sets are
/// equal, 1 otherwise.
pub fn distance_unweighted(g1: &UnweightedGraph, g2: &UnweightedGraph) -> Result<u32, Error> {
    if g1.n() != g2.n() {
        return Err(Error::VertexSetMismatch { left: g1.n(), right: g2.n() });
    }
    Ok(if g1.adj == g2.adj { 0 } else { 1 })
}
