//! Error type shared by the graph, filtration and diagram layers.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge-list line that does not hold exactly two vertex tokens.
    Parse { line: usize, reason: String },
    /// A vertex id outside the graph's `0..n` range.
    UnknownVertex { vertex: u32, order: usize },
    /// An operation on a vertex pair that requires two distinct vertices.
    SameVertex { vertex: u32 },
    /// Two graphs that must share a vertex set but do not.
    VertexSetMismatch { left: usize, right: usize },
    /// Two filtered complexes that must share a simplex set but do not.
    SimplexSetMismatch,
    /// Two diagrams of different homology dimensions.
    DimensionMismatch { left: u32, right: u32 },
    /// Two diagrams whose filtration directions disagree.
    ConventionMismatch,
    /// Graph power with exponent zero.
    InvalidPower,
    /// No absent vertex pair is left to insert.
    CompleteGraph,
    /// A fixture name that does not parse or is not known.
    UnknownFixture { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, reason } => write!(f, "line {line}: {reason}"),
            Error::UnknownVertex { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph on {order} vertices")
            }
            Error::SameVertex { vertex } => {
                write!(f, "expected two distinct vertices, got {vertex} twice")
            }
            Error::VertexSetMismatch { left, right } => {
                write!(f, "vertex sets differ: {left} vs {right} vertices")
            }
            Error::SimplexSetMismatch => write!(f, "complexes are not over the same simplex set"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "diagram dimensions differ: {left} vs {right}")
            }
            Error::ConventionMismatch => write!(f, "diagram filtration directions differ"),
            Error::InvalidPower => write!(f, "graph power requires an exponent of at least 1"),
            Error::CompleteGraph => write!(f, "graph is complete, no edge can be added"),
            Error::UnknownFixture { name } => write!(f, "unknown fixture: {name}"),
        }
    }
}
