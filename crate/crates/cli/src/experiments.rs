//! Canned experiment suites: fixture reproductions, stability trials, random
//! graph families, real datasets. Each writes diagrams under its own output
//! directory and prints a summary table.

use std::path::{Path, PathBuf};
use std::time::Instant;

use cliph_core::complex::FiltrationKind;
use cliph_core::generate::{
    add_random_edge, fixture, sample_circle_rgg, sample_sbm, toggle_random_pair,
    CircleRggSpec, SbmSpec,
};
use cliph_core::persistence::{
    diagram_from_pairing, finalize_diagram, reduce_and_pair, PersistenceDiagram,
};
use cliph_core::ratio::{rat, to_f64, Rational};
use cliph_core::{
    bottleneck_distance, build_filtered_complex_on, cliqueness_map, distance_functions,
    distance_unweighted, distance_weighted, union_support, AnalysisRequest, UnweightedGraph,
};

use crate::io::{read_graph, write_coords_csv, write_diagram_csv};
use crate::report::TimingObserver;
use crate::CliError;

pub struct ExperimentContext {
    pub seed: u64,
    pub out_dir: PathBuf,
    pub data_dir: PathBuf,
    pub trials: Option<usize>,
}

pub fn run_experiment(name: &str, ctx: &ExperimentContext) -> Result<(), CliError> {
    match name {
        "stability_trials" => stability_trials(ctx),
        "figure1_suite" => figure1_suite(ctx),
        "figure3_suite" => figure3_suite(ctx),
        "sbm_suite" => sbm_suite(ctx),
        "rgg_suite" => rgg_suite(ctx),
        "real_suite" => real_suite(ctx),
        other => Err(CliError::Invalid(format!(
            "unknown experiment {other:?}; expected one of stability_trials, \
             figure1_suite, figure3_suite, sbm_suite, rgg_suite, real_suite"
        ))),
    }
}

fn suite_dir(ctx: &ExperimentContext, suite: &str) -> PathBuf {
    ctx.out_dir.join(suite)
}

fn fmt_point(p: &cliph_core::DiagramPoint) -> String {
    match p.death {
        Some(d) => format!("({}, {})", p.birth, d),
        None => format!("({}, inf)", p.birth),
    }
}

fn fmt_points(d: &PersistenceDiagram) -> String {
    let parts: Vec<String> = d.points.iter().map(fmt_point).collect();
    if parts.is_empty() {
        "(empty)".to_string()
    } else {
        parts.join(" ")
    }
}

fn fmt_opt(r: Option<Rational>) -> String {
    r.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

fn pipelines(g: &UnweightedGraph, kind: FiltrationKind) -> Vec<PersistenceDiagram> {
    cliph_core::run(&AnalysisRequest { graph: g, kind, max_dim: 1, drop_zero: true })
        .diagrams
}

fn write_pair(
    dir: &Path,
    stem: &str,
    diagrams: &[PersistenceDiagram],
) -> Result<(), CliError> {
    for d in diagrams {
        write_diagram_csv(&dir.join(format!("{stem}_h{}.csv", d.dimension)), d, false)?;
    }
    Ok(())
}

/// Figure 1 pattern: one clique, two cliques, two bridged cliques, and the
/// finite-H0 point count that separates them.
fn figure1_suite(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "figure1_suite");
    println!("{:<22} {:>9}  H0 points", "fixture", "finite-H0");
    for name in ["single_clique(5)", "two_cliques(5)", "bridged_cliques(5)"] {
        let g = fixture(name)?;
        let diagrams = pipelines(&g, FiltrationKind::Cliqueness);
        let stem = name.replace(['(', ')'], "_").replace(',', "-");
        write_pair(&dir, stem.trim_end_matches('_'), &diagrams)?;
        let h0 = &diagrams[0];
        println!(
            "{name:<22} {:>9}  {}",
            h0.points.len() - h0.essential_count(),
            fmt_points(h0)
        );
    }
    println!("wrote diagrams under {}", dir.display());
    Ok(())
}

/// Figure 3 pattern: the dense cycle has one significant H1 class; a chord
/// adds a second, much smaller one.
fn figure3_suite(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "figure3_suite");
    println!("{:<30} {:>9}  persistences", "graph", "H1 count");
    let mut all: Vec<Vec<Rational>> = Vec::new();
    for name in ["dense_cycle(20,3)", "dense_cycle_with_chord(20,3)"] {
        let g = fixture(name)?;
        let diagrams = pipelines(&g, FiltrationKind::Cliqueness);
        let stem = name.replace(['(', ')'], "_").replace(',', "-");
        write_pair(&dir, stem.trim_end_matches('_'), &diagrams)?;
        let mut pers: Vec<Rational> = diagrams[1]
            .points
            .iter()
            .map(|p| p.birth - p.death.unwrap_or_else(|| rat(0, 1)))
            .collect();
        pers.sort();
        pers.reverse();
        let shown: Vec<String> = pers.iter().map(|p| p.to_string()).collect();
        println!("{name:<30} {:>9}  [{}]", pers.len(), shown.join(", "));
        all.push(pers);
    }
    if let [_, with_chord] = all.as_slice() {
        if let [big, small, ..] = with_chord.as_slice() {
            println!("chord case ratio: {}", to_f64(*big / *small));
        }
    }
    println!("wrote diagrams under {}", dir.display());
    Ok(())
}

pub struct ChainMeasurement {
    pub bottleneck_h0: Rational,
    pub bottleneck_h1: Rational,
    pub dk: Rational,
    pub dw: Rational,
    pub du: u32,
}

/// Distances between a graph and its one-pair edit under the similarity
/// weighting, with both filtrations laid over the union support so the
/// function distance and the diagrams live on one complex.
pub fn measure_chain(g: &UnweightedGraph, h: &UnweightedGraph) -> ChainMeasurement {
    let du = distance_unweighted(g, h).expect("same vertex set");
    let w1 = cliqueness_map(g);
    let w2 = cliqueness_map(h);
    let dw = distance_weighted(&w1, &w2).expect("same vertex set");
    let common = union_support(&w1, &w2).expect("same vertex set");
    let f1 = build_filtered_complex_on(&common, &w1, 1);
    let f2 = build_filtered_complex_on(&common, &w2, 1);
    let dk = distance_functions(&f1, &f2).expect("same simplex set");
    let p1 = reduce_and_pair(&f1);
    let p2 = reduce_and_pair(&f2);
    let mut per_dim = [rat(0, 1); 2];
    for dim in 0..2u32 {
        let a = finalize_diagram(&diagram_from_pairing(&f1, &p1, dim), true);
        let b = finalize_diagram(&diagram_from_pairing(&f2, &p2, dim), true);
        per_dim[dim as usize] = bottleneck_distance(&a, &b)
            .expect("same kind and dimension")
            .distance
            .expect("equal essential counts on a shared complex");
    }
    ChainMeasurement {
        bottleneck_h0: per_dim[0],
        bottleneck_h1: per_dim[1],
        dk,
        dw,
        du,
    }
}

/// One stability trial: a seeded random graph and the same graph with a
/// single random pair toggled.
pub fn trial_graph(master_seed: u64, trial: usize) -> (UnweightedGraph, UnweightedGraph) {
    let n = 8 + trial % 23;
    let p = [0.15, 0.3, 0.5][trial % 3];
    let seed = master_seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(trial as u64);
    let g = sample_sbm(&SbmSpec { block_sizes: vec![n], p_in: p, p_out: 0.0, seed });
    let h = toggle_random_pair(&g, seed ^ 0x5555_5555_5555_5555);
    (g, h)
}

/// Single-edge edits across many random graphs: the similarity filtration
/// moves a bounded amount, the two baselines blow up to infinity.
fn stability_trials(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "stability_trials");
    let trials = ctx.trials.unwrap_or(200);
    let mut rows = String::from("trial,kind,dim,bottleneck,d_k,d_w,d_u\n");

    let mut cliq_max = rat(0, 1);
    let mut violations = 0usize;
    let mut base_max: [Option<Rational>; 2] = [None, None];
    let mut base_inf: [usize; 2] = [0, 0];

    for trial in 0..trials {
        let (g, h) = trial_graph(ctx.seed, trial);
        let m = measure_chain(&g, &h);
        for (dim, b) in [(0u32, m.bottleneck_h0), (1, m.bottleneck_h1)] {
            rows.push_str(&format!(
                "{trial},cliqueness,{dim},{b},{},{},{}\n",
                m.dk, m.dw, m.du
            ));
            cliq_max = cliq_max.max(b);
            let chained =
                b <= m.dk && m.dk <= m.dw && m.dw <= rat(i64::from(m.du), 1);
            if !chained {
                violations += 1;
            }
        }
        for (k, kind) in
            [FiltrationKind::Clique, FiltrationKind::Power].into_iter().enumerate()
        {
            let left = pipelines(&g, kind);
            let right = pipelines(&h, kind);
            for dim in 0..=1usize {
                let b = bottleneck_distance(&left[dim], &right[dim])
                    .expect("same kind and dimension")
                    .distance;
                rows.push_str(&format!(
                    "{trial},{},{dim},{},,,\n",
                    kind.name(),
                    fmt_opt(b)
                ));
                match b {
                    None => base_inf[k] += 1,
                    Some(v) => {
                        base_max[k] =
                            Some(base_max[k].map_or(v, |m: Rational| m.max(v)))
                    }
                }
            }
        }
    }

    crate::io::write_file(&dir.join("trials.csv"), &rows)?;
    println!(
        "{:<12} {:>7} {:>14} {:>10} {:>11}",
        "kind", "trials", "max-finite-B", "inf-count", "violations"
    );
    println!(
        "{:<12} {:>7} {:>14} {:>10} {:>11}",
        "cliqueness",
        trials,
        cliq_max.to_string(),
        0,
        violations
    );
    for (k, kind) in ["clique", "power"].into_iter().enumerate() {
        println!(
            "{kind:<12} {trials:>7} {:>14} {:>10} {:>11}",
            base_max[k].map_or_else(|| "-".to_string(), |v| v.to_string()),
            base_inf[k],
            "-"
        );
    }
    println!("per-trial rows in {}", dir.join("trials.csv").display());
    Ok(())
}

fn median(sorted: &[Rational]) -> Rational {
    let n = sorted.len();
    assert!(n > 0);
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / rat(2, 1)
    }
}

/// Finite H0 points whose persistence exceeds five times the median finite
/// persistence; the block-merge signature.
pub fn dominant_h0_count(h0: &PersistenceDiagram) -> usize {
    let mut pers: Vec<Rational> = h0
        .points
        .iter()
        .filter_map(|p| p.death.map(|d| p.birth - d))
        .collect();
    if pers.is_empty() {
        return 0;
    }
    pers.sort();
    let cutoff = median(&pers) * rat(5, 1);
    pers.iter().filter(|&&p| p > cutoff).count()
}

/// The block-merge signature lives entirely in H0, so the suite stops at
/// dimension 0; triangle enumeration over saturated 75-vertex blocks would
/// dominate the runtime for nothing.
pub fn sbm_h0(spec: &SbmSpec) -> PersistenceDiagram {
    let g = sample_sbm(spec);
    let mut out = cliph_core::run(&AnalysisRequest {
        graph: &g,
        kind: FiltrationKind::Cliqueness,
        max_dim: 0,
        drop_zero: true,
    });
    out.diagrams.swap_remove(0)
}

fn sbm_suite(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "sbm_suite");
    let four = |seed| SbmSpec {
        block_sizes: vec![75, 75, 75, 75],
        p_in: 0.3,
        p_out: 0.005,
        seed,
    };
    let one = SbmSpec { block_sizes: vec![300], p_in: 0.3, p_out: 0.005, seed: ctx.seed };

    let one_block = sbm_h0(&one);
    write_diagram_csv(&dir.join("one_block_h0.csv"), &one_block, false)?;
    println!(
        "one-block  seed={}: {} dominant H0 points",
        ctx.seed,
        dominant_h0_count(&one_block)
    );

    let mut hits = 0usize;
    for i in 0..20u64 {
        let h0 = sbm_h0(&four(ctx.seed + i));
        let count = dominant_h0_count(&h0);
        if i == 0 {
            write_diagram_csv(&dir.join("four_block_h0.csv"), &h0, false)?;
        }
        println!("four-block seed={}: {count} dominant H0 points", ctx.seed + i);
        if count == 3 {
            hits += 1;
        }
    }
    println!("four-block: exactly 3 dominant points in {hits}/20 seeds");
    println!("wrote diagrams under {}", dir.display());
    Ok(())
}

fn rgg_suite(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "rgg_suite");
    let mut total = 0.0f64;
    for i in 0..30u64 {
        let (g, _) =
            sample_circle_rgg(&CircleRggSpec { n: 200, radius: 0.25, seed: ctx.seed + i });
        total += 2.0 * g.edge_count() as f64 / g.n() as f64;
    }
    println!("mean degree over 30 seeds: {:.2}", total / 30.0);

    let spec = CircleRggSpec { n: 200, radius: 0.25, seed: ctx.seed };
    let (base, coords) = sample_circle_rgg(&spec);
    write_coords_csv(&dir.join("coords.csv"), &coords)?;
    let with_chord = add_random_edge(&base, ctx.seed)?;

    for (stem, g) in [("rgg", &base), ("rgg_chord", &with_chord)] {
        let diagrams = pipelines(g, FiltrationKind::Cliqueness);
        write_pair(&dir, stem, &diagrams)?;
        let mut pers: Vec<Rational> = diagrams[1]
            .points
            .iter()
            .map(|p| p.birth - p.death.unwrap_or_else(|| rat(0, 1)))
            .collect();
        pers.sort();
        pers.reverse();
        let shown: Vec<String> =
            pers.iter().take(4).map(|p| format!("{:.4}", to_f64(*p))).collect();
        println!(
            "{stem:<10} H1 points: {:>3}   top persistences: [{}]",
            pers.len(),
            shown.join(", ")
        );
    }
    println!("wrote diagrams under {}", dir.display());
    Ok(())
}

/// The induced subgraph of the largest connected component, relabeled to
/// dense ids in original order.
pub fn largest_component(g: &UnweightedGraph) -> UnweightedGraph {
    let comp = g.components();
    let count = comp.iter().map(|&c| c + 1).max().unwrap_or(0) as usize;
    if count <= 1 {
        return g.clone();
    }
    let mut sizes = vec![0usize; count];
    for &c in &comp {
        sizes[c as usize] += 1;
    }
    let best = sizes
        .iter()
        .enumerate()
        .max_by_key(|&(_, s)| *s)
        .map(|(i, _)| i as u32)
        .expect("nonempty");
    let mut relabel = vec![u32::MAX; g.n()];
    let mut next = 0u32;
    for v in 0..g.n() {
        if comp[v] == best {
            relabel[v] = next;
            next += 1;
        }
    }
    let edges = g
        .edges()
        .filter(|&(u, _)| comp[u as usize] == best)
        .map(|(u, v)| (relabel[u as usize], relabel[v as usize]));
    UnweightedGraph::from_edges(next as usize, edges)
}

fn real_suite(ctx: &ExperimentContext) -> Result<(), CliError> {
    let dir = suite_dir(ctx, "real_suite");
    let mut missing: Vec<PathBuf> = Vec::new();
    println!(
        "{:<10} {:>8} {:>7} {:>9} {:>14}",
        "dataset", "vertices", "edges", "time", "H0 pers>=0.3"
    );
    for (name, take_largest) in
        [("karate", false), ("dolphins", false), ("protein", true)]
    {
        let path = ctx.data_dir.join(format!("{name}.txt"));
        if !path.exists() {
            missing.push(path);
            continue;
        }
        let loaded = read_graph(&path)?;
        let g = if take_largest {
            largest_component(&loaded.graph)
        } else {
            loaded.graph
        };
        let started = Instant::now();
        let mut timer = TimingObserver::new();
        let out = cliph_core::run_observed(
            &AnalysisRequest {
                graph: &g,
                kind: FiltrationKind::Cliqueness,
                max_dim: 1,
                drop_zero: true,
            },
            &mut timer,
        );
        let elapsed = started.elapsed();
        write_pair(&dir, name, &out.diagrams)?;
        // Essential points persist forever, so they always clear the bar.
        let significant = out.diagrams[0]
            .points
            .iter()
            .filter(|p| match p.death {
                None => true,
                Some(d) => p.birth - d >= rat(3, 10),
            })
            .count();
        println!(
            "{name:<10} {:>8} {:>7} {:>8.2}s {significant:>14}",
            g.n(),
            g.edge_count(),
            elapsed.as_secs_f64()
        );
    }
    println!("wrote diagrams under {}", dir.display());
    if missing.is_empty() {
        Ok(())
    } else {
        let listed: Vec<String> =
            missing.iter().map(|p| p.display().to_string()).collect();
        Err(CliError::Invalid(format!(
            "missing datasets: {} (convert each to the two-token edge-list format \
             and place it at the listed path; see README)",
            listed.join(", ")
        )))
    }
}
