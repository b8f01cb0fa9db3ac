//! Filtered simplicial complexes over graph cliques.
//!
//! One builder per filtration kind: cliqueness (descending weight order),
//! clique complex (ascending by dimension) and power complex (ascending
//! Vietoris-Rips over shortest-path distances). All three produce the same
//! structure: simplices in a total order compatible with face inclusion,
//! each carrying an exact rational filtration value.

use alloc::vec::Vec;

use hashbrown::HashMap;
use num_traits::Zero;

use crate::error::Error;
use crate::graph::UnweightedGraph;
use crate::ratio::{rat, Rational};
use crate::cliqueness::WeightedGraph;

/// Which way filtration values run along the simplex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Values non-increasing along the order (cliqueness).
    Descending,
    /// Values non-decreasing along the order (clique, power).
    Ascending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiltrationKind {
    Cliqueness,
    Clique,
    Power,
}

impl FiltrationKind {
    pub fn direction(self) -> Direction {
        match self {
            FiltrationKind::Cliqueness => Direction::Descending,
            FiltrationKind::Clique | FiltrationKind::Power => Direction::Ascending,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FiltrationKind::Cliqueness => "cliqueness",
            FiltrationKind::Clique => "clique",
            FiltrationKind::Power => "power",
        }
    }
}

/// Simplex in canonical form: strictly increasing vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            assert!(w[0] < w[1], "repeated vertex in simplex");
        }
        assert!(!vertices.is_empty(), "empty simplex");
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Codimension-1 faces (empty for vertices).
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let dim = self.dim();
        (0..self.vertices.len()).filter(move |_| dim > 0).map(move |skip| {
            let vs = self
                .vertices
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            Simplex { vertices: vs }
        })
    }
}

#[derive(Debug, Clone)]
pub struct FilteredComplex {
    simplices: Vec<Simplex>,
    values: Vec<Rational>,
    kind: FiltrationKind,
    index: HashMap<Simplex, u32>,
}

impl FilteredComplex {
    /// Sorts the given simplices into filtration order and indexes them.
    ///
    /// Order: by value along the kind's direction, then ascending dimension,
    /// then lexicographic vertex order. Dimension-before-lex realizes
    /// face-before-coface among equal values; the lexicographic tail is an
    /// arbitrary but fixed tie-break, so rebuilds are reproducible.
    pub fn from_parts(mut entries: Vec<(Rational, Simplex)>, kind: FiltrationKind) -> Self {
        let direction = kind.direction();
        entries.sort_unstable_by(|a, b| {
            let value = match direction {
                Direction::Descending => b.0.cmp(&a.0),
                Direction::Ascending => a.0.cmp(&b.0),
            };
            value
                .then_with(|| a.1.vertices.len().cmp(&b.1.vertices.len()))
                .then_with(|| a.1.vertices.cmp(&b.1.vertices))
        });
        let mut simplices = Vec::with_capacity(entries.len());
        let mut values = Vec::with_capacity(entries.len());
        for (v, s) in entries {
            values.push(v);
            simplices.push(s);
        }
        let index = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as u32))
            .collect::<HashMap<_, _>>();
        assert_eq!(index.len(), simplices.len(), "duplicate simplex");
        let fc = FilteredComplex { simplices, values, kind, index };
        fc.debug_validate();
        fc
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplex(&self, i: u32) -> &Simplex {
        &self.simplices[i as usize]
    }

    pub fn value(&self, i: u32) -> Rational {
        self.values[i as usize]
    }

    pub fn dim_of(&self, i: u32) -> usize {
        self.simplices[i as usize].dim()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<u32> {
        self.index.get(s).copied()
    }

    pub fn kind(&self) -> FiltrationKind {
        self.kind
    }

    pub fn direction(&self) -> Direction {
        self.kind.direction()
    }

    /// Largest simplex dimension present, or `None` when empty.
    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.dim()).max()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Rational, &Simplex)> + '_ {
        self.values.iter().copied().zip(self.simplices.iter())
    }

    pub fn count_of_dim(&self, d: usize) -> usize {
        self.simplices.iter().filter(|s| s.dim() == d).count()
    }

    /// Invariant sweep: closure, face-before-coface, value monotonicity.
    pub fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        {
            for i in 1..self.len() {
                let (prev, cur) = (self.values[i - 1], self.values[i]);
                match self.direction() {
                    Direction::Descending => assert!(prev >= cur, "values increase along order"),
                    Direction::Ascending => assert!(prev <= cur, "values decrease along order"),
                }
            }
            for (i, s) in self.simplices.iter().enumerate() {
                for facet in s.facets() {
                    let j = self.index.get(&facet).copied().expect("closure violated");
                    assert!((j as usize) < i, "face does not precede coface");
                }
            }
        }
    }
}

/// All cliques of size `1..=max_size` over sorted adjacency lists, canonical,
/// each exactly once. Incremental expansion: a clique is grown only by common
/// neighbors larger than its maximum vertex.
pub fn enumerate_cliques_adj(adj: &[Vec<u32>], max_size: usize) -> Vec<Simplex> {
    assert!(max_size >= 1);
    let mut out = Vec::new();
    let mut current = Vec::new();
    for v in 0..adj.len() as u32 {
        current.push(v);
        out.push(Simplex { vertices: current.clone() });
        if max_size > 1 {
            let cands: Vec<u32> =
                adj[v as usize].iter().copied().filter(|&u| u > v).collect();
            grow(adj, &mut current, &cands, max_size, &mut out);
        }
        current.pop();
    }
    out
}

fn grow(
    adj: &[Vec<u32>],
    current: &mut Vec<u32>,
    cands: &[u32],
    max_size: usize,
    out: &mut Vec<Simplex>,
) {
    for (i, &v) in cands.iter().enumerate() {
        current.push(v);
        out.push(Simplex { vertices: current.clone() });
        if current.len() < max_size {
            let rest = &cands[i + 1..];
            let child: Vec<u32> = intersect_sorted(rest, &adj[v as usize]);
            if !child.is_empty() {
                grow(adj, current, &child, max_size, out);
            }
        }
        current.pop();
    }
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Cliques of an unweighted graph.
pub fn enumerate_cliques(g: &UnweightedGraph, max_size: usize) -> Vec<Simplex> {
    enumerate_cliques_adj(g.neighbor_lists(), max_size)
}

/// Filtration value of a simplex under an edge-weight lookup: minimum edge
/// weight for dimension >= 1; for a vertex, the maximum weight over incident
/// support edges (zero when there are none).
pub fn filtration_value(
    simplex: &Simplex,
    weights: &WeightedGraph,
    support_incident: &[u32],
) -> Rational {
    let vs = simplex.vertices();
    if vs.len() == 1 {
        return support_incident
            .iter()
            .map(|&u| weights.weight(vs[0], u))
            .max()
            .unwrap_or_else(Rational::zero);
    }
    let mut min = None;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let w = weights.weight(vs[i], vs[j]);
            min = Some(match min {
                None => w,
                Some(m) if w < m => w,
                Some(m) => m,
            });
        }
    }
    min.expect("dimension >= 1 has at least one edge")
}

/// Cliqueness filtration of a weighted graph, capped one dimension above
/// `max_dim` so that `max_dim`-homology is exact.
pub fn build_filtered_complex(w: &WeightedGraph, max_dim: usize) -> FilteredComplex {
    let support: Vec<Vec<u32>> =
        (0..w.n() as u32).map(|v| w.support_neighbors(v).to_vec()).collect();
    build_cliqueness_on(&support, w, max_dim)
}

/// Cliqueness filtration with clique enumeration running over an explicit
/// support graph; weights absent from `w` read as zero. The support must be
/// a supergraph of `w`'s own support. Used to put two weightings over a
/// common simplex set.
pub fn build_filtered_complex_on(
    support: &UnweightedGraph,
    w: &WeightedGraph,
    max_dim: usize,
) -> FilteredComplex {
    build_cliqueness_on(support.neighbor_lists(), w, max_dim)
}

fn build_cliqueness_on(
    support: &[Vec<u32>],
    w: &WeightedGraph,
    max_dim: usize,
) -> FilteredComplex {
    assert_eq!(support.len(), w.n(), "support vertex set mismatch");
    let cliques = enumerate_cliques_adj(support, max_dim + 2);
    let entries = cliques
        .into_iter()
        .map(|s| {
            let incident = &support[s.vertices()[0] as usize];
            (filtration_value(&s, w, incident), s)
        })
        .collect();
    FilteredComplex::from_parts(entries, FiltrationKind::Cliqueness)
}

/// Clique-complex filtration: stage `i` is the `i`-skeleton, so each simplex
/// enters at its own dimension.
pub fn build_clique_complex(g: &UnweightedGraph, max_dim: usize) -> FilteredComplex {
    let entries = enumerate_cliques(g, max_dim + 2)
        .into_iter()
        .map(|s| (rat(s.dim() as i64, 1), s))
        .collect();
    FilteredComplex::from_parts(entries, FiltrationKind::Clique)
}

/// Power filtration: Vietoris-Rips over shortest-path distances. Vertices
/// enter at scale 0 and a simplex at the maximum pairwise distance of its
/// vertices; vertices in different components are never joined.
pub fn build_power_complex(g: &UnweightedGraph, max_dim: usize) -> FilteredComplex {
    let n = g.n();
    let dist: Vec<Vec<u32>> = (0..n as u32).map(|v| g.bfs_distances(v)).collect();
    // Support: all same-component pairs.
    let adj: Vec<Vec<u32>> = (0..n).map(|v| {
        (0..n as u32)
            .filter(|&u| u as usize != v && dist[v][u as usize] != u32::MAX)
            .collect()
    }).collect();
    let cliques = enumerate_cliques_adj(&adj, max_dim + 2);
    let entries = cliques
        .into_iter()
        .map(|s| {
            let vs = s.vertices();
            let mut scale = 0u32;
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    scale = scale.max(dist[vs[i] as usize][vs[j] as usize]);
                }
            }
            (rat(scale as i64, 1), s)
        })
        .collect();
    FilteredComplex::from_parts(entries, FiltrationKind::Power)
}

/// Max absolute filtration-value difference over a shared simplex set.
pub fn distance_functions(f1: &FilteredComplex, f2: &FilteredComplex) -> Result<Rational, Error> {
    if f1.len() != f2.len() {
        return Err(Error::SimplexSetMismatch);
    }
    let mut best = Rational::zero();
    for (v1, s) in f1.entries() {
        let Some(j) = f2.index_of(s) else {
            return Err(Error::SimplexSetMismatch);
        };
        let d = v1 - f2.value(j);
        let d = if d < Rational::zero() { -d } else { d };
        best = best.max(d);
    }
    Ok(best)
}
