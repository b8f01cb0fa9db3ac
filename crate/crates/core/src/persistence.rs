//! Persistence by boundary-matrix reduction over the two-element field.
//!
//! Standard left-to-right column reduction: columns hold sorted face indices,
//! a column is repeatedly cancelled against the earlier column sharing its
//! lowest entry, and the surviving lowest entries define the birth/death
//! pairing. Diagrams then remap order indices to filtration values.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::complex::{Direction, FilteredComplex, FiltrationKind};
use crate::ratio::Rational;

/// Sparse boundary matrix in filtration order.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    /// Sorted order-indices of each simplex's codimension-1 faces.
    columns: Vec<Vec<u32>>,
    dims: Vec<u32>,
}

impl BoundaryMatrix {
    pub fn from_complex(fc: &FilteredComplex) -> Self {
        let mut columns = Vec::with_capacity(fc.len());
        let mut dims = Vec::with_capacity(fc.len());
        for i in 0..fc.len() as u32 {
            let s = fc.simplex(i);
            let mut col: Vec<u32> = s
                .facets()
                .map(|f| fc.index_of(&f).expect("complex is closed"))
                .collect();
            col.sort_unstable();
            debug_assert!(col.iter().all(|&j| j < i), "face after coface");
            debug_assert_eq!(col.len(), if s.dim() == 0 { 0 } else { s.dim() + 1 });
            columns.push(col);
            dims.push(s.dim() as u32);
        }
        BoundaryMatrix { columns, dims }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn dim_of(&self, i: u32) -> u32 {
        self.dims[i as usize]
    }
}

/// Output of the reduction: matched birth/death index pairs plus the
/// unpaired (essential) birth indices, both in increasing index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(u32, u32)>,
    pub essential: Vec<u32>,
}

/// Reduces the boundary matrix of `fc` and extracts the pairing.
pub fn reduce_and_pair(fc: &FilteredComplex) -> Pairing {
    let mut matrix = BoundaryMatrix::from_complex(fc);
    let m = matrix.len();
    // low_owner[i] = column whose lowest entry is i.
    let mut low_owner: Vec<Option<u32>> = vec![None; m];
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut essential: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    for j in 0..m {
        loop {
            let Some(&low) = matrix.columns[j].last() else {
                essential.push(j as u32);
                break;
            };
            match low_owner[low as usize] {
                None => {
                    low_owner[low as usize] = Some(j as u32);
                    pairs.push((low, j as u32));
                    break;
                }
                Some(i) => {
                    let (head, tail) = matrix.columns.split_at_mut(j);
                    symmetric_difference(&mut tail[0], &head[i as usize], &mut scratch);
                }
            }
        }
    }
    // Birth indices that got paired are not essential.
    let mut paired_birth = vec![false; m];
    for &(b, _) in &pairs {
        paired_birth[b as usize] = true;
    }
    essential.retain(|&i| !paired_birth[i as usize]);
    pairs.sort_unstable();
    debug_assert!(pairs.iter().all(|&(b, d)| b < d));
    debug_assert!(pairs
        .iter()
        .all(|&(b, d)| matrix.dim_of(b) + 1 == matrix.dim_of(d)));
    Pairing { pairs, essential }
}

fn symmetric_difference(target: &mut Vec<u32>, other: &[u32], scratch: &mut Vec<u32>) {
    scratch.clear();
    let (mut i, mut j) = (0usize, 0usize);
    while i < target.len() && j < other.len() {
        match target[i].cmp(&other[j]) {
            core::cmp::Ordering::Less => {
                scratch.push(target[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                scratch.push(other[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    scratch.extend_from_slice(&target[i..]);
    scratch.extend_from_slice(&other[j..]);
    core::mem::swap(target, scratch);
}

/// One diagram point; `death: None` is the infinite-death sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagramPoint {
    pub birth: Rational,
    pub death: Option<Rational>,
}

impl DiagramPoint {
    /// Birth-death gap; `None` for essential points.
    pub fn persistence(&self) -> Option<Rational> {
        self.death.map(|d| {
            let p = self.birth - d;
            if p < Rational::zero() {
                -p
            } else {
                p
            }
        })
    }

    pub fn is_essential(&self) -> bool {
        self.death.is_none()
    }

    /// Canonical presentation order: essential points first by birth, then
    /// finite points by (birth, death).
    fn sort_key(&self) -> (u8, Rational, Rational) {
        match self.death {
            None => (0, self.birth, Rational::zero()),
            Some(d) => (1, self.birth, d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceDiagram {
    pub dimension: u32,
    pub points: Vec<DiagramPoint>,
    pub kind: FiltrationKind,
}

impl PersistenceDiagram {
    pub fn direction(&self) -> Direction {
        self.kind.direction()
    }

    pub fn essential_count(&self) -> usize {
        self.points.iter().filter(|p| p.is_essential()).count()
    }

    pub fn finite_points(&self) -> impl Iterator<Item = &DiagramPoint> {
        self.points.iter().filter(|p| !p.is_essential())
    }

    pub fn sort_canonical(&mut self) {
        self.points.sort_by_key(|p| p.sort_key());
    }

    /// Multiset equality, ignoring presentation order.
    pub fn same_points(&self, other: &PersistenceDiagram) -> bool {
        let mut a = self.points.clone();
        let mut b = other.points.clone();
        a.sort_by_key(|p| p.sort_key());
        b.sort_by_key(|p| p.sort_key());
        self.dimension == other.dimension && a == b
    }
}

/// Remaps the dimension-`p` part of a pairing to filtration values. Points
/// come out in birth-index order; `finalize_diagram` applies the death
/// replacement policy and canonical sorting.
pub fn diagram_from_pairing(
    fc: &FilteredComplex,
    pairing: &Pairing,
    p: u32,
) -> PersistenceDiagram {
    let mut points = Vec::new();
    for &(b, d) in &pairing.pairs {
        if fc.dim_of(b) == p as usize {
            points.push(DiagramPoint { birth: fc.value(b), death: Some(fc.value(d)) });
        }
    }
    for &b in &pairing.essential {
        if fc.dim_of(b) == p as usize {
            points.push(DiagramPoint { birth: fc.value(b), death: None });
        }
    }
    PersistenceDiagram { dimension: p, points, kind: fc.kind() }
}

/// Death-value replacement and presentation cleanup.
///
/// Cliqueness diagrams: in dimension 0 every infinite-death point except the
/// one with the largest birth (first such point on ties, i.e. the earliest
/// birth simplex) gets death 0; in dimension >= 1 all of them do. Clique and
/// power diagrams keep their infinite points. `drop_zero` removes
/// zero-persistence points. Points end up canonically sorted.
pub fn finalize_diagram(d: &PersistenceDiagram, drop_zero: bool) -> PersistenceDiagram {
    let mut out = d.clone();
    if out.kind == FiltrationKind::Cliqueness {
        let keep: Option<usize> = if out.dimension == 0 {
            let mut best: Option<(usize, Rational)> = None;
            for (i, pt) in out.points.iter().enumerate() {
                if pt.is_essential() && best.is_none_or(|(_, b)| pt.birth > b) {
                    best = Some((i, pt.birth));
                }
            }
            best.map(|(i, _)| i)
        } else {
            None
        };
        for (i, pt) in out.points.iter_mut().enumerate() {
            if pt.is_essential() && Some(i) != keep {
                pt.death = Some(Rational::zero());
            }
        }
    }
    if drop_zero {
        out.points.retain(|p| p.death != Some(p.birth));
    }
    out.sort_canonical();
    out
}

/// Betti numbers of the full complex: essential class counts per dimension.
pub fn betti_numbers(fc: &FilteredComplex, up_to: u32) -> Vec<usize> {
    let pairing = reduce_and_pair(fc);
    let mut betti = vec![0usize; up_to as usize + 1];
    for &b in &pairing.essential {
        let d = fc.dim_of(b);
        if d <= up_to as usize {
            betti[d] += 1;
        }
    }
    betti
}

/// Simplex count sanity: alternating sum of simplex counts equals the
/// alternating sum of Betti numbers.
pub fn euler_characteristic(fc: &FilteredComplex) -> i64 {
    let mut chi = 0i64;
    for (_, s) in fc.entries() {
        chi += if s.dim() % 2 == 0 { 1 } else { -1 };
    }
    chi
}
