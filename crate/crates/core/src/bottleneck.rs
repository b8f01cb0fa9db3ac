//! Bottleneck distance between persistence diagrams.
//!
//! Infinite-death points are matched among themselves in sorted birth order;
//! unequal counts make the distance infinite. The finite parts are matched
//! under the L-infinity cost with diagonal projections allowed, and the
//! optimum is found by binary search over the finite set of realizable
//! costs, testing feasibility with augmenting-path bipartite matching.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::Error;
use crate::persistence::{DiagramPoint, PersistenceDiagram};
use crate::ratio::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchEdge {
    /// Finite point `left` of the first diagram matched to finite point
    /// `right` of the second; indices into the diagrams' point lists.
    Points { left: usize, right: usize, cost: Rational },
    LeftDiagonal { left: usize, cost: Rational },
    RightDiagonal { right: usize, cost: Rational },
    /// Infinite-death points matched by sorted birth order.
    Essentials { left: usize, right: usize, cost: Rational },
}

impl MatchEdge {
    pub fn cost(&self) -> Rational {
        match *self {
            MatchEdge::Points { cost, .. }
            | MatchEdge::LeftDiagonal { cost, .. }
            | MatchEdge::RightDiagonal { cost, .. }
            | MatchEdge::Essentials { cost, .. } => cost,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleneckOutcome {
    /// `None` is the infinite distance (essential counts differ).
    pub distance: Option<Rational>,
    /// A matching realizing the distance; empty when the distance is infinite.
    pub matching: Vec<MatchEdge>,
}

fn abs(r: Rational) -> Rational {
    if r < Rational::zero() {
        -r
    } else {
        r
    }
}

fn linf(a: &DiagramPoint, b: &DiagramPoint) -> Rational {
    let db = abs(a.birth - b.birth);
    let dd = abs(a.death.expect("finite point") - b.death.expect("finite point"));
    db.max(dd)
}

fn diagonal_cost(p: &DiagramPoint) -> Rational {
    abs(p.birth - p.death.expect("finite point")) / rat(2, 1)
}

pub fn bottleneck_distance(
    d1: &PersistenceDiagram,
    d2: &PersistenceDiagram,
) -> Result<BottleneckOutcome, Error> {
    if d1.dimension != d2.dimension {
        return Err(Error::DimensionMismatch { left: d1.dimension, right: d2.dimension });
    }
    if d1.direction() != d2.direction() {
        return Err(Error::ConventionMismatch);
    }

    let ess1: Vec<usize> = indices_of(d1, true);
    let ess2: Vec<usize> = indices_of(d2, true);
    if ess1.len() != ess2.len() {
        return Ok(BottleneckOutcome { distance: None, matching: Vec::new() });
    }
    let mut matching = Vec::new();
    let mut bound = Rational::zero();
    let (mut b1, mut b2) = (ess1.clone(), ess2.clone());
    b1.sort_by_key(|&i| d1.points[i].birth);
    b2.sort_by_key(|&i| d2.points[i].birth);
    for (&i, &j) in b1.iter().zip(&b2) {
        let cost = abs(d1.points[i].birth - d2.points[j].birth);
        bound = bound.max(cost);
        matching.push(MatchEdge::Essentials { left: i, right: j, cost });
    }

    let xs: Vec<usize> = indices_of(d1, false);
    let ys: Vec<usize> = indices_of(d2, false);
    let problem = MatchingProblem::new(d1, d2, &xs, &ys);
    let (finite, assignment) = problem.solve();
    bound = bound.max(finite);
    for edge in problem.translate(&assignment, &xs, &ys) {
        matching.push(edge);
    }
    Ok(BottleneckOutcome { distance: Some(bound), matching })
}

fn indices_of(d: &PersistenceDiagram, essential: bool) -> Vec<usize> {
    d.points
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_essential() == essential)
        .map(|(i, _)| i)
        .collect()
}

/// Finite-part matching instance: left side is the first diagram's points
/// plus one diagonal slot per point of the second, right side symmetric.
struct MatchingProblem {
    costs: Vec<Vec<Rational>>,
    diag_x: Vec<Rational>,
    diag_y: Vec<Rational>,
}

impl MatchingProblem {
    fn new(d1: &PersistenceDiagram, d2: &PersistenceDiagram, xs: &[usize], ys: &[usize]) -> Self {
        let costs: Vec<Vec<Rational>> = xs
            .iter()
            .map(|&i| ys.iter().map(|&j| linf(&d1.points[i], &d2.points[j])).collect())
            .collect();
        let diag_x = xs.iter().map(|&i| diagonal_cost(&d1.points[i])).collect();
        let diag_y = ys.iter().map(|&j| diagonal_cost(&d2.points[j])).collect();
        MatchingProblem { costs, diag_x, diag_y }
    }

    fn nx(&self) -> usize {
        self.diag_x.len()
    }

    fn ny(&self) -> usize {
        self.diag_y.len()
    }

    /// Smallest threshold admitting a perfect matching, plus that matching
    /// (right-node owner per left node).
    fn solve(&self) -> (Rational, Vec<Option<u32>>) {
        if self.nx() == 0 && self.ny() == 0 {
            return (Rational::zero(), Vec::new());
        }
        let mut candidates: Vec<Rational> = Vec::new();
        candidates.push(Rational::zero());
        for row in &self.costs {
            candidates.extend_from_slice(row);
        }
        candidates.extend_from_slice(&self.diag_x);
        candidates.extend_from_slice(&self.diag_y);
        candidates.sort_unstable();
        candidates.dedup();
        let mut lo = 0usize;
        let mut hi = candidates.len() - 1;
        debug_assert!(self.matching_at(candidates[hi]).is_some(), "max cost must be feasible");
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.matching_at(candidates[mid]).is_some() {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let t = candidates[lo];
        let matched = self.matching_at(t).expect("binary search landed on a feasible cost");
        debug_assert!(lo == 0 || self.matching_at(candidates[lo - 1]).is_none());
        (t, matched)
    }

    /// Kuhn's augmenting paths on the diagonal-augmented bipartite graph.
    /// Left `u < nx` is a real point, `u >= nx` a diagonal slot; right
    /// symmetric. Returns the right-owner per left node on success.
    fn matching_at(&self, t: Rational) -> Option<Vec<Option<u32>>> {
        let (nx, ny) = (self.nx(), self.ny());
        let total = nx + ny;
        let mut right_owner: Vec<Option<u32>> = vec![None; total];
        let mut visited = vec![u32::MAX; total];
        for u in 0..total {
            if !self.augment(u as u32, t, &mut right_owner, &mut visited, u as u32) {
                return None;
            }
        }
        let mut left_owner: Vec<Option<u32>> = vec![None; total];
        for (r, owner) in right_owner.iter().enumerate() {
            if let Some(l) = owner {
                left_owner[*l as usize] = Some(r as u32);
            }
        }
        Some(left_owner)
    }

    fn allowed(&self, left: u32, right: u32, t: Rational) -> bool {
        let (nx, ny) = (self.nx(), self.ny());
        let l = left as usize;
        let r = right as usize;
        if l < nx {
            if r < ny {
                self.costs[l][r] <= t
            } else {
                // A real point may retire to its own diagonal slot only.
                r - ny == l && self.diag_x[l] <= t
            }
        } else if r < ny {
            l - nx == r && self.diag_y[r] <= t
        } else {
            // Diagonal to diagonal carries no cost.
            true
        }
    }

    fn augment(
        &self,
        u: u32,
        t: Rational,
        right_owner: &mut Vec<Option<u32>>,
        visited: &mut Vec<u32>,
        stamp: u32,
    ) -> bool {
        let total = self.nx() + self.ny();
        for r in 0..total as u32 {
            if visited[r as usize] == stamp || !self.allowed(u, r, t) {
                continue;
            }
            visited[r as usize] = stamp;
            match right_owner[r as usize] {
                None => {
                    right_owner[r as usize] = Some(u);
                    return true;
                }
                Some(prev) => {
                    if self.augment(prev, t, right_owner, visited, stamp) {
                        right_owner[r as usize] = Some(u);
                        return true;
                    }
                }
            }
        }
        false
    }

    fn translate(
        &self,
        left_owner: &[Option<u32>],
        xs: &[usize],
        ys: &[usize],
    ) -> Vec<MatchEdge> {
        let (nx, ny) = (self.nx(), self.ny());
        let mut out = Vec::new();
        for l in 0..nx {
            match left_owner[l] {
                Some(r) if (r as usize) < ny => out.push(MatchEdge::Points {
                    left: xs[l],
                    right: ys[r as usize],
                    cost: self.costs[l][r as usize],
                }),
                Some(_) => {
                    out.push(MatchEdge::LeftDiagonal { left: xs[l], cost: self.diag_x[l] })
                }
                None => unreachable!("perfect matching covers all real points"),
            }
        }
        for r in left_owner[nx..nx + ny].iter().flatten() {
            if (*r as usize) < ny {
                out.push(MatchEdge::RightDiagonal {
                    right: ys[*r as usize],
                    cost: self.diag_y[*r as usize],
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FiltrationKind;

    fn diagram(points: Vec<(Rational, Option<Rational>)>) -> PersistenceDiagram {
        PersistenceDiagram {
            dimension: 0,
            kind: FiltrationKind::Cliqueness,
            points: points
                .into_iter()
                .map(|(birth, death)| DiagramPoint { birth, death })
                .collect(),
        }
    }

    #[test]
    fn identity_distance_is_zero() {
        let d = diagram(vec![
            (rat(1, 1), None),
            (rat(1, 1), Some(rat(1, 5))),
            (rat(9, 10), Some(rat(1, 2))),
        ]);
        let out = bottleneck_distance(&d, &d).unwrap();
        assert_eq!(out.distance, Some(rat(0, 1)));
    }

    #[test]
    fn lone_point_projects_to_the_diagonal() {
        let a = diagram(vec![(rat(1, 1), Some(rat(0, 1)))]);
        let b = diagram(Vec::new());
        let out = bottleneck_distance(&a, &b).unwrap();
        assert_eq!(out.distance, Some(rat(1, 2)));
        assert_eq!(
            out.matching,
            vec![MatchEdge::LeftDiagonal { left: 0, cost: rat(1, 2) }]
        );
    }

    #[test]
    fn direct_match_beats_double_projection() {
        let a = diagram(vec![(rat(1, 1), Some(rat(1, 5)))]);
        let b = diagram(vec![(rat(1, 1), Some(rat(0, 1)))]);
        let out = bottleneck_distance(&a, &b).unwrap();
        assert_eq!(out.distance, Some(rat(1, 5)));
        assert_eq!(
            out.matching,
            vec![MatchEdge::Points { left: 0, right: 0, cost: rat(1, 5) }]
        );
    }

    #[test]
    fn essential_count_mismatch_is_infinite() {
        let a = diagram(vec![(rat(1, 1), None), (rat(1, 1), None)]);
        let b = diagram(vec![(rat(1, 1), None)]);
        let out = bottleneck_distance(&a, &b).unwrap();
        assert_eq!(out.distance, None);
        assert!(out.matching.is_empty());
    }

    #[test]
    fn essential_births_drive_the_distance() {
        let a = diagram(vec![(rat(1, 1), None)]);
        let b = diagram(vec![(rat(1, 2), None)]);
        let out = bottleneck_distance(&a, &b).unwrap();
        assert_eq!(out.distance, Some(rat(1, 2)));
    }

    #[test]
    fn mismatched_dimensions_error() {
        let a = diagram(Vec::new());
        let mut b = diagram(Vec::new());
        b.dimension = 1;
        assert!(matches!(
            bottleneck_distance(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut c = diagram(Vec::new());
        c.kind = FiltrationKind::Clique;
        assert!(matches!(bottleneck_distance(&a, &c), Err(Error::ConventionMismatch)));
    }

    #[test]
    fn crossing_pairs_prefer_the_cheaper_assignment() {
        // Two points near the diagonal versus one far point: the far point
        // must take the far partner, the near one its diagonal.
        let a = diagram(vec![(rat(1, 1), Some(rat(0, 1))), (rat(1, 2), Some(rat(2, 5)))]);
        let b = diagram(vec![(rat(1, 1), Some(rat(1, 10)))]);
        let out = bottleneck_distance(&a, &b).unwrap();
        assert_eq!(out.distance, Some(rat(1, 10)));
        assert!(out
            .matching
            .contains(&MatchEdge::Points { left: 0, right: 0, cost: rat(1, 10) }));
        assert!(out
            .matching
            .contains(&MatchEdge::LeftDiagonal { left: 1, cost: rat(1, 20) }));
    }
}
