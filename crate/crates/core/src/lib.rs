//! Persistent homology of undirected, unweighted graphs under three
//! filtrations: the cliqueness filtration (descending Jaccard weights on the
//! completed graph), the clique-complex filtration (skeleta by dimension) and
//! the power filtration (Vietoris-Rips over shortest-path distances).
//!
//! The crate also provides the bottleneck distance between persistence
//! diagrams, the graph/weight/function distances used to compare inputs, and
//! seeded generators for the canonical fixtures and random graph families the
//! test suites run on.
//!
//! All weights and filtration values are exact rationals; ordering and
//! tie-breaking never go through floating point. The crate is `no_std`
//! (`alloc` required); file IO, serialization and the command line layer live
//! in the companion `cliph-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bottleneck;
pub mod cliqueness;
pub mod complex;
pub mod error;
pub mod generate;
pub mod graph;
pub mod persistence;
pub mod pipeline;
pub mod ratio;

pub use bottleneck::{bottleneck_distance, BottleneckOutcome, MatchEdge};
pub use cliqueness::{
    cliqueness_map, cliqueness_weight, distance_weighted, union_support, WeightedGraph,
};
pub use complex::{
    build_clique_complex, build_filtered_complex, build_filtered_complex_on,
    build_power_complex, distance_functions, Direction, FilteredComplex, FiltrationKind,
    Simplex,
};
pub use error::Error;
pub use graph::{distance_unweighted, parse_edge_list, Diameter, LoadedGraph, UnweightedGraph};
pub use persistence::{DiagramPoint, PersistenceDiagram};
pub use pipeline::{run, run_observed, AnalysisRequest, RunObserver, RunOutput, RunReport};
pub use ratio::Rational;
