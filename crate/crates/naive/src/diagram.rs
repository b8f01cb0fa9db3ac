//! Stepwise persistence-diagram oracle.
//!
//! Instead of reducing one boundary matrix, this oracle walks the filtration
//! stage by stage (a stage is a maximal run of equal filtration values) and
//! recomputes homology ranks from scratch with dense Gaussian elimination:
//! cycle spaces as kernels of the p-boundary restricted to each stage prefix,
//! boundary spaces as images of the (p+1)-boundary, and the persistent rank
//! of the map between two stages from the dimension of `Z_i + B_j`.
//!
//! Point multiplicities then follow from second differences of those ranks.
//! Diffing Betti numbers of consecutive stages alone cannot place a diagram
//! point's death next to its birth once several classes coexist, so the
//! two-index rank table is the honest slow way to pin the whole multiset
//! down. Zero-persistence points never surface at stage level; engine
//! diagrams are compared with those points dropped.

use cliph_core::complex::{FilteredComplex, FiltrationKind};
use cliph_core::persistence::{DiagramPoint, PersistenceDiagram};
use cliph_core::ratio::Rational;
use cliph_core::{cliqueness_map, graph::UnweightedGraph};

use crate::gf2::{Basis, BitVec, KernelTracker};

/// Diagrams (per dimension `0..=max_dim`) recomputed the slow way, with the
/// same death-replacement policy and zero-persistence drop the fast pipeline
/// applies.
pub fn oracle_diagrams(fc: &FilteredComplex, max_dim: u32) -> Vec<PersistenceDiagram> {
    let stages = Stages::of(fc);
    (0..=max_dim)
        .map(|p| {
            let points = stage_points(fc, &stages, p as usize);
            finalize(points, fc.kind(), p)
        })
        .collect()
}

/// The full oracle pipeline for a graph: same complex construction as the
/// engine, independent persistence computation.
pub fn oracle_pipeline(
    g: &UnweightedGraph,
    kind: FiltrationKind,
    max_dim: u32,
) -> Vec<PersistenceDiagram> {
    let fc = match kind {
        FiltrationKind::Cliqueness => {
            let (active, _) = g.remove_isolated_vertices();
            cliph_core::build_filtered_complex(&cliqueness_map(&active), max_dim as usize)
        }
        FiltrationKind::Clique => cliph_core::build_clique_complex(g, max_dim as usize),
        FiltrationKind::Power => cliph_core::build_power_complex(g, max_dim as usize),
    };
    oracle_diagrams(&fc, max_dim)
}

struct Stages {
    /// Stage value, one per maximal equal-value run.
    values: Vec<Rational>,
    /// Stage id per complex index.
    of: Vec<usize>,
}

impl Stages {
    fn of(fc: &FilteredComplex) -> Self {
        let mut values: Vec<Rational> = Vec::new();
        let mut of = Vec::with_capacity(fc.len());
        for i in 0..fc.len() as u32 {
            let v = fc.value(i);
            if values.last() != Some(&v) {
                values.push(v);
            }
            of.push(values.len() - 1);
        }
        Stages { values, of }
    }

    fn count(&self) -> usize {
        self.values.len()
    }
}

/// Diagram points of dimension `p` in stage-value terms (no zero-persistence
/// points; infinite deaths as `None`).
fn stage_points(fc: &FilteredComplex, stages: &Stages, p: usize) -> Vec<DiagramPoint> {
    let t_count = stages.count();
    if t_count == 0 {
        return Vec::new();
    }

    // Dense row ids for the (p-1)-simplices, in filtration order.
    let mut row_of = vec![usize::MAX; fc.len()];
    let mut rows = 0usize;
    for i in 0..fc.len() as u32 {
        if p > 0 && fc.dim_of(i) == p - 1 {
            row_of[i as usize] = rows;
            rows += 1;
        }
    }

    // p-columns and (p+1)-columns with their stages, in filtration order.
    let mut p_cols: Vec<(usize, BitVec)> = Vec::new();
    let mut p_col_of = vec![usize::MAX; fc.len()];
    let mut p1_cols: Vec<(usize, BitVec)> = Vec::new();
    for i in 0..fc.len() as u32 {
        let dim = fc.dim_of(i);
        if dim == p {
            let mut col = BitVec::zeros(rows);
            for facet in fc.simplex(i).facets() {
                let j = fc.index_of(&facet).expect("closed complex");
                col.set(row_of[j as usize]);
            }
            p_col_of[i as usize] = p_cols.len();
            p_cols.push((stages.of[i as usize], col));
        }
    }
    for i in 0..fc.len() as u32 {
        if fc.dim_of(i) == p + 1 {
            let mut col = BitVec::zeros(p_cols.len());
            for facet in fc.simplex(i).facets() {
                let j = fc.index_of(&facet).expect("closed complex");
                col.set(p_col_of[j as usize]);
            }
            p1_cols.push((stages.of[i as usize], col));
        }
    }

    // Kernel members of the p-boundary, each tagged with the stage of the
    // column that produced it; the ones with stage <= i span Z_p of stage i.
    let mut tracker = KernelTracker::new(rows, p_cols.len());
    let mut kernel_stage: Vec<usize> = Vec::new();
    for (stage, col) in &p_cols {
        let before = tracker.kernel().len();
        tracker.push_column(col.clone());
        if tracker.kernel().len() > before {
            kernel_stage.push(*stage);
        }
    }
    let kernel: Vec<BitVec> = tracker.kernel().to_vec();

    // Boundary-space dimension per stage.
    let mut b_rank = vec![0i64; t_count];
    {
        let mut basis = Basis::new(p_cols.len());
        let mut cursor = 0usize;
        for (t, slot) in b_rank.iter_mut().enumerate() {
            while cursor < p1_cols.len() && p1_cols[cursor].0 == t {
                basis.insert(p1_cols[cursor].1.clone());
                cursor += 1;
            }
            *slot = basis.rank() as i64;
        }
        assert_eq!(cursor, p1_cols.len(), "stages must be visited in order");
    }

    // beta[j] for the current birth stage i: rank H_p(K_i) -> H_p(K_j),
    // computed as dim(Z_i + B_j) - dim B_j.
    let mut points: Vec<DiagramPoint> = Vec::new();
    let mut beta_prev: Vec<i64> = vec![0; t_count];
    for i in 0..t_count {
        let mut basis = Basis::new(p_cols.len());
        for (k, v) in kernel.iter().enumerate() {
            if kernel_stage[k] <= i {
                let grown = basis.insert(v.clone());
                assert!(grown, "kernel members are independent");
            }
        }
        let mut beta_cur = vec![0i64; t_count];
        let mut cursor = 0usize;
        for j in 0..t_count {
            while cursor < p1_cols.len() && p1_cols[cursor].0 == j {
                basis.insert(p1_cols[cursor].1.clone());
                cursor += 1;
            }
            beta_cur[j] = basis.rank() as i64 - b_rank[j];
        }
        for j in i + 1..t_count {
            let died_here = beta_cur[j - 1] - beta_cur[j];
            let died_older = if i > 0 { beta_prev[j - 1] - beta_prev[j] } else { 0 };
            let mult = died_here - died_older;
            assert!(mult >= 0, "negative multiplicity");
            for _ in 0..mult {
                points.push(DiagramPoint {
                    birth: stages.values[i],
                    death: Some(stages.values[j]),
                });
            }
        }
        let essential = beta_cur[t_count - 1] - if i > 0 { beta_prev[t_count - 1] } else { 0 };
        assert!(essential >= 0, "negative essential count");
        for _ in 0..essential {
            points.push(DiagramPoint { birth: stages.values[i], death: None });
        }
        beta_prev = beta_cur;
    }
    points
}

/// Same death replacement as the engine's finalize step, restated.
fn finalize(mut points: Vec<DiagramPoint>, kind: FiltrationKind, dim: u32) -> PersistenceDiagram {
    if kind == FiltrationKind::Cliqueness {
        let keep = if dim == 0 {
            points
                .iter()
                .enumerate()
                .filter(|(_, pt)| pt.death.is_none())
                .max_by_key(|(i, pt)| (pt.birth, usize::MAX - i))
                .map(|(i, _)| i)
        } else {
            None
        };
        for (i, pt) in points.iter_mut().enumerate() {
            if pt.death.is_none() && Some(i) != keep {
                pt.death = Some(Rational::from_integer(0));
            }
        }
    }
    points.retain(|pt| pt.death != Some(pt.birth));
    let mut d = PersistenceDiagram { dimension: dim, points, kind };
    d.sort_canonical();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use cliph_core::generate::fixture;
    use cliph_core::pipeline::{clique_pipeline, cliqueness_pipeline, power_pipeline};
    use cliph_core::ratio::rat;

    #[test]
    fn oracle_matches_hand_counts_on_k5_fixtures() {
        let g = fixture("single_clique(5)").unwrap();
        let ds = oracle_pipeline(&g, FiltrationKind::Cliqueness, 1);
        assert_eq!(ds[0].points, vec![DiagramPoint { birth: rat(1, 1), death: None }]);
        assert!(ds[1].points.is_empty());

        let g = fixture("bridged_cliques(5)").unwrap();
        let ds = oracle_pipeline(&g, FiltrationKind::Cliqueness, 0);
        assert_eq!(
            ds[0].points,
            vec![
                DiagramPoint { birth: rat(1, 1), death: None },
                DiagramPoint { birth: rat(1, 1), death: Some(rat(1, 5)) },
            ]
        );
    }

    #[test]
    fn oracle_matches_engine_on_fixtures() {
        for name in [
            "single_clique(4)",
            "two_cliques(3)",
            "bridged_cliques(4)",
            "cycle(6)",
            "dense_cycle(12, 2)",
            "fig4_a",
            "fig4_b",
            "fig6_a",
            "fig6_b",
        ] {
            let g = fixture(name).unwrap();
            for kind in [
                FiltrationKind::Cliqueness,
                FiltrationKind::Clique,
                FiltrationKind::Power,
            ] {
                let engine = match kind {
                    FiltrationKind::Cliqueness => cliqueness_pipeline(&g, 1, true),
                    FiltrationKind::Clique => clique_pipeline(&g, 1, true),
                    FiltrationKind::Power => power_pipeline(&g, 1, true),
                };
                let oracle = oracle_pipeline(&g, kind, 1);
                for (e, o) in engine.iter().zip(&oracle) {
                    assert!(
                        e.same_points(o),
                        "{name} {kind:?} H{}: engine {:?} vs oracle {:?}",
                        e.dimension,
                        e.points,
                        o.points
                    );
                }
            }
        }
    }
}
