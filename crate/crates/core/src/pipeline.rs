//! End-to-end diagram computation for the three filtration kinds.

use alloc::vec::Vec;

use crate::cliqueness::cliqueness_map;
use crate::complex::{
    build_clique_complex, build_filtered_complex, build_power_complex, FilteredComplex,
    FiltrationKind,
};
use crate::graph::UnweightedGraph;
use crate::persistence::{
    diagram_from_pairing, finalize_diagram, reduce_and_pair, PersistenceDiagram,
};

#[derive(Debug, Clone)]
pub struct AnalysisRequest<'g> {
    pub graph: &'g UnweightedGraph,
    pub kind: FiltrationKind,
    /// Highest homology dimension to report; the complex is built one
    /// dimension higher so this dimension is exact.
    pub max_dim: u32,
    pub drop_zero: bool,
}

/// Stage-completion callback; the CLI hangs wall-clock timing on it.
pub trait RunObserver {
    fn stage(&mut self, _name: &str) {}
}

/// Observer that ignores everything.
pub struct NoopObserver;

impl RunObserver for NoopObserver {}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub input_vertices: usize,
    pub input_edges: usize,
    /// Vertices left after isolated-vertex removal (cliqueness only;
    /// otherwise equals `input_vertices`).
    pub active_vertices: usize,
    /// Positive-weight pairs of the weighted graph (cliqueness only).
    pub weighted_pairs: usize,
    /// Simplex counts per dimension of the built complex.
    pub simplex_counts: Vec<usize>,
    /// Zero-persistence points dropped per reported dimension.
    pub dropped_zero: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    /// One diagram per dimension `0..=max_dim`.
    pub diagrams: Vec<PersistenceDiagram>,
    pub report: RunReport,
}

pub fn run(req: &AnalysisRequest) -> RunOutput {
    run_observed(req, &mut NoopObserver)
}

pub fn run_observed(req: &AnalysisRequest, obs: &mut dyn RunObserver) -> RunOutput {
    let mut report = RunReport {
        input_vertices: req.graph.n(),
        input_edges: req.graph.edge_count(),
        active_vertices: req.graph.n(),
        ..RunReport::default()
    };
    let fc = match req.kind {
        FiltrationKind::Cliqueness => {
            let (active, _kept) = req.graph.remove_isolated_vertices();
            report.active_vertices = active.n();
            obs.stage("isolated-removal");
            let w = cliqueness_map(&active);
            report.weighted_pairs = w.pair_count();
            obs.stage("cliqueness-map");
            let fc = build_filtered_complex(&w, req.max_dim as usize);
            obs.stage("complex");
            fc
        }
        FiltrationKind::Clique => {
            let fc = build_clique_complex(req.graph, req.max_dim as usize);
            obs.stage("complex");
            fc
        }
        FiltrationKind::Power => {
            let fc = build_power_complex(req.graph, req.max_dim as usize);
            obs.stage("complex");
            fc
        }
    };
    report.simplex_counts = simplex_counts(&fc);
    let pairing = reduce_and_pair(&fc);
    obs.stage("reduction");
    let mut diagrams = Vec::with_capacity(req.max_dim as usize + 1);
    for p in 0..=req.max_dim {
        let raw = diagram_from_pairing(&fc, &pairing, p);
        let finalized = finalize_diagram(&raw, req.drop_zero);
        report.dropped_zero.push(raw.points.len() - finalized.points.len());
        diagrams.push(finalized);
    }
    obs.stage("diagrams");
    RunOutput { diagrams, report }
}

fn simplex_counts(fc: &FilteredComplex) -> Vec<usize> {
    let mut counts = Vec::new();
    for (_, s) in fc.entries() {
        if counts.len() <= s.dim() {
            counts.resize(s.dim() + 1, 0);
        }
        counts[s.dim()] += 1;
    }
    counts
}

/// Cliqueness diagrams for dimensions `0..=max_dim`.
pub fn cliqueness_pipeline(
    g: &UnweightedGraph,
    max_dim: u32,
    drop_zero: bool,
) -> Vec<PersistenceDiagram> {
    run(&AnalysisRequest { graph: g, kind: FiltrationKind::Cliqueness, max_dim, drop_zero })
        .diagrams
}

/// Clique-complex diagrams for dimensions `0..=max_dim`.
pub fn clique_pipeline(
    g: &UnweightedGraph,
    max_dim: u32,
    drop_zero: bool,
) -> Vec<PersistenceDiagram> {
    run(&AnalysisRequest { graph: g, kind: FiltrationKind::Clique, max_dim, drop_zero }).diagrams
}

/// Power-filtration diagrams for dimensions `0..=max_dim`.
pub fn power_pipeline(
    g: &UnweightedGraph,
    max_dim: u32,
    drop_zero: bool,
) -> Vec<PersistenceDiagram> {
    run(&AnalysisRequest { graph: g, kind: FiltrationKind::Power, max_dim, drop_zero }).diagrams
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::fixture;
    use crate::persistence::DiagramPoint;
    use crate::ratio::rat;

    #[test]
    fn single_clique_h0() {
        let g = fixture("single_clique(5)").unwrap();
        let ds = cliqueness_pipeline(&g, 0, true);
        assert_eq!(ds[0].points, vec![DiagramPoint { birth: rat(1, 1), death: None }]);
    }

    #[test]
    fn two_cliques_h0() {
        let g = fixture("two_cliques(5)").unwrap();
        let ds = cliqueness_pipeline(&g, 0, true);
        assert_eq!(
            ds[0].points,
            vec![
                DiagramPoint { birth: rat(1, 1), death: None },
                DiagramPoint { birth: rat(1, 1), death: Some(rat(0, 1)) },
            ]
        );
    }

    #[test]
    fn bridged_cliques_h0() {
        let g = fixture("bridged_cliques(5)").unwrap();
        let ds = cliqueness_pipeline(&g, 0, true);
        assert_eq!(
            ds[0].points,
            vec![
                DiagramPoint { birth: rat(1, 1), death: None },
                DiagramPoint { birth: rat(1, 1), death: Some(rat(1, 5)) },
            ]
        );
    }

    #[test]
    fn tree_has_empty_h1() {
        let g = UnweightedGraph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]);
        let ds = cliqueness_pipeline(&g, 1, true);
        assert!(ds[1].points.is_empty());
    }

    #[test]
    fn clique_pipeline_fig4() {
        let a = fixture("fig4_a").unwrap();
        let ds = clique_pipeline(&a, 1, true);
        assert_eq!(
            ds[1].points,
            vec![
                DiagramPoint { birth: rat(1, 1), death: None },
                DiagramPoint { birth: rat(1, 1), death: None },
                DiagramPoint { birth: rat(1, 1), death: None },
            ]
        );
        let b = fixture("fig4_b").unwrap();
        let ds = clique_pipeline(&b, 1, true);
        assert_eq!(
            ds[1].points,
            vec![DiagramPoint { birth: rat(1, 1), death: Some(rat(2, 1)) }; 4]
        );
    }

    #[test]
    fn power_pipeline_c4_h1() {
        let g = fixture("cycle(4)").unwrap();
        let ds = power_pipeline(&g, 1, true);
        assert_eq!(
            ds[1].points,
            vec![DiagramPoint { birth: rat(1, 1), death: Some(rat(2, 1)) }]
        );
    }

    #[test]
    fn power_pipeline_disjoint_triangles_h0() {
        let g = fixture("fig6_a").unwrap();
        let ds = power_pipeline(&g, 0, false);
        assert_eq!(ds[0].essential_count(), 2);
        assert_eq!(ds[0].points.len(), 6);
        for p in ds[0].finite_points() {
            assert_eq!((p.birth, p.death), (rat(0, 1), Some(rat(1, 1))));
        }
    }

    #[test]
    fn empty_graph_runs_clean() {
        let g = UnweightedGraph::new(0);
        let out = run(&AnalysisRequest {
            graph: &g,
            kind: FiltrationKind::Cliqueness,
            max_dim: 1,
            drop_zero: true,
        });
        assert_eq!(out.diagrams.len(), 2);
        assert!(out.diagrams.iter().all(|d| d.points.is_empty()));
        assert_eq!(out.report.simplex_counts, Vec::<usize>::new());
    }

    #[test]
    fn observer_sees_each_stage_once() {
        struct Names(Vec<alloc::string::String>);
        impl RunObserver for Names {
            fn stage(&mut self, name: &str) {
                self.0.push(name.into());
            }
        }
        let g = fixture("single_clique(4)").unwrap();
        let mut names = Names(Vec::new());
        run_observed(
            &AnalysisRequest {
                graph: &g,
                kind: FiltrationKind::Cliqueness,
                max_dim: 1,
                drop_zero: true,
            },
            &mut names,
        );
        assert_eq!(
            names.0,
            vec!["isolated-removal", "cliqueness-map", "complex", "reduction", "diagrams"]
        );
    }

    #[test]
    fn report_counts_simplices() {
        let g = fixture("single_clique(3)").unwrap();
        let out = run(&AnalysisRequest {
            graph: &g,
            kind: FiltrationKind::Cliqueness,
            max_dim: 1,
            drop_zero: true,
        });
        assert_eq!(out.report.simplex_counts, vec![3, 3, 1]);
        assert_eq!(out.report.weighted_pairs, 3);
        assert_eq!(out.report.active_vertices, 3);
    }
}
