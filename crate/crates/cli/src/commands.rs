//! Argument surface and command dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliph_core::complex::FiltrationKind;
use cliph_core::generate::{
    add_random_edge, describe_sbm, fixture, sample_circle_rgg, sample_sbm, CircleRggSpec,
    SbmSpec,
};
use cliph_core::persistence::PersistenceDiagram;
use cliph_core::ratio::to_f64;
use cliph_core::{AnalysisRequest, MatchEdge, UnweightedGraph};

use crate::experiments::{run_experiment, ExperimentContext};
use crate::io;
use crate::report::{print_report, TimingObserver};
use crate::svg::render_svg;
use crate::CliError;

#[derive(Parser)]
#[command(
    name = "cliph",
    version,
    about = "Persistent homology of graphs under a similarity filtration and two baselines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute persistence diagrams of an edge-list graph
    Compute(ComputeArgs),
    /// Bottleneck distance between two diagram files, or two graphs with --kind
    Compare(CompareArgs),
    /// Emit generated graphs as edge lists
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Run a canned experiment suite
    Experiment(ExperimentArgs),
    /// Render diagram files as an SVG scatter
    Plot(PlotArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Cliqueness,
    Clique,
    Power,
}

impl KindArg {
    fn kind(self) -> FiltrationKind {
        match self {
            KindArg::Cliqueness => FiltrationKind::Cliqueness,
            KindArg::Clique => FiltrationKind::Clique,
            KindArg::Power => FiltrationKind::Power,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Edge-list input file
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = KindArg::Cliqueness)]
    pub kind: KindArg,
    /// Highest homology dimension to report
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Keep zero-persistence points
    #[arg(long)]
    pub keep_zero: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Write values as decimals instead of exact fractions (lossy)
    #[arg(long)]
    pub float: bool,
    /// Output path prefix; defaults to the input file stem
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also dump the filtration, one simplex per line
    #[arg(long)]
    pub dump_filtration: Option<PathBuf>,
    /// Also dump the pair weights as CSV (cliqueness only)
    #[arg(long)]
    pub dump_weights: Option<PathBuf>,
}

#[derive(Args)]
pub struct CompareArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// Treat the inputs as graphs and diagram them under this filtration
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Highest homology dimension when comparing graphs
    #[arg(long = "dim", default_value_t = 1)]
    pub dim: u32,
    /// Also print decimal approximations
    #[arg(long)]
    pub float: bool,
}

#[derive(Subcommand)]
pub enum GenerateCmd {
    /// Stochastic block model
    Sbm(SbmArgs),
    /// Random geometric graph on the unit circle
    Rgg(RggArgs),
    /// Named fixture graph
    Fixture(FixtureArgs),
}

#[derive(Args)]
pub struct SbmArgs {
    /// Comma-separated block sizes
    #[arg(long, default_value = "75,75,75,75")]
    pub blocks: String,
    #[arg(long, default_value_t = 0.3)]
    pub p_in: f64,
    #[arg(long, default_value_t = 0.005)]
    pub p_out: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add one uniformly chosen absent edge afterwards
    #[arg(long)]
    pub extra_edge: bool,
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RggArgs {
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// Chord-length connection threshold
    #[arg(long, default_value_t = 0.25)]
    pub radius: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add one uniformly chosen absent edge afterwards
    #[arg(long)]
    pub extra_edge: bool,
    /// Also write vertex coordinates as CSV
    #[arg(long)]
    pub coords: Option<PathBuf>,
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct FixtureArgs {
    /// Fixture name, e.g. bridged_cliques(5) or dense_cycle(20,3)
    pub name: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add one uniformly chosen absent edge afterwards
    #[arg(long)]
    pub extra_edge: bool,
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ExperimentArgs {
    /// One of: stability_trials, figure1_suite, figure3_suite, sbm_suite,
    /// rgg_suite, real_suite
    pub name: String,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, default_value = "experiments_out")]
    pub out: PathBuf,
    /// Directory holding real datasets (real_suite)
    #[arg(long, default_value = "data")]
    pub data: PathBuf,
    /// Trial count override for stability_trials
    #[arg(long)]
    pub trials: Option<usize>,
}

#[derive(Args)]
pub struct PlotArgs {
    /// Diagram files (CSV or JSON), overlaid in one plot
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Output SVG path; defaults to the first input with an .svg extension
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Plot(args) => cmd_plot(args),
    }
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), CliError> {
    let loaded = io::read_graph(&args.input)?;
    if loaded.self_loops_dropped + loaded.duplicates_dropped > 0 {
        eprintln!(
            "dropped {} self-loops, {} duplicate edges",
            loaded.self_loops_dropped, loaded.duplicates_dropped
        );
    }
    let kind = args.kind.kind();
    let mut timer = TimingObserver::new();
    let out = cliph_core::run_observed(
        &AnalysisRequest {
            graph: &loaded.graph,
            kind,
            max_dim: args.dim,
            drop_zero: !args.keep_zero,
        },
        &mut timer,
    );

    let prefix = match &args.out {
        Some(p) => p.clone(),
        None => PathBuf::from(
            args.input
                .file_stem()
                .map_or_else(|| "diagram".to_string(), |s| s.to_string_lossy().into_owned()),
        ),
    };
    let ext = match args.format {
        FormatArg::Csv => "csv",
        FormatArg::Json => "json",
    };
    for d in &out.diagrams {
        let path = io::diagram_path(&prefix, d.dimension, ext);
        match args.format {
            FormatArg::Csv => io::write_diagram_csv(&path, d, args.float)?,
            FormatArg::Json => io::write_diagram_json(&path, d, args.float)?,
        }
        println!("{}", path.display());
    }

    if let Some(path) = &args.dump_weights {
        if kind != FiltrationKind::Cliqueness {
            return Err(CliError::Invalid(
                "--dump-weights applies to the cliqueness kind only".into(),
            ));
        }
        let (active, _) = loaded.graph.remove_isolated_vertices();
        io::write_weights_csv(path, &cliph_core::cliqueness_map(&active))?;
        println!("{}", path.display());
    }
    if let Some(path) = &args.dump_filtration {
        let fc = match kind {
            FiltrationKind::Cliqueness => {
                let (active, _) = loaded.graph.remove_isolated_vertices();
                cliph_core::build_filtered_complex(
                    &cliph_core::cliqueness_map(&active),
                    args.dim as usize,
                )
            }
            FiltrationKind::Clique => {
                cliph_core::build_clique_complex(&loaded.graph, args.dim as usize)
            }
            FiltrationKind::Power => {
                cliph_core::build_power_complex(&loaded.graph, args.dim as usize)
            }
        };
        io::write_filtration_dump(path, &fc)?;
        println!("{}", path.display());
    }

    print_report(&out.report, &timer);
    Ok(())
}

fn fmt_point(p: &cliph_core::DiagramPoint) -> String {
    match p.death {
        Some(d) => format!("({}, {})", p.birth, d),
        None => format!("({}, inf)", p.birth),
    }
}

fn print_matching(
    edges: &[MatchEdge],
    left: &PersistenceDiagram,
    right: &PersistenceDiagram,
) {
    const SHOWN: usize = 20;
    let l = |i: usize| fmt_point(&left.points[i]);
    let r = |i: usize| fmt_point(&right.points[i]);
    for edge in edges.iter().take(SHOWN) {
        match *edge {
            MatchEdge::Points { left, right, cost } => {
                println!("  {} -> {}  cost {cost}", l(left), r(right));
            }
            MatchEdge::LeftDiagonal { left, cost } => {
                println!("  {} -> diagonal  cost {cost}", l(left));
            }
            MatchEdge::RightDiagonal { right, cost } => {
                println!("  diagonal -> {}  cost {cost}", r(right));
            }
            MatchEdge::Essentials { left, right, cost } => {
                println!("  {} ~ {}  essential, cost {cost}", l(left), r(right));
            }
        }
    }
    if edges.len() > SHOWN {
        println!("  ... {} more", edges.len() - SHOWN);
    }
}

fn compare_pair(
    left: &PersistenceDiagram,
    right: &PersistenceDiagram,
    float: bool,
) -> Result<(), CliError> {
    let outcome = cliph_core::bottleneck_distance(left, right)?;
    let value = match outcome.distance {
        None => "inf".to_string(),
        Some(d) => {
            let exact = d.to_string();
            let approx = format!("{}", to_f64(d));
            if float && approx != exact {
                format!("{exact} ({approx})")
            } else {
                exact
            }
        }
    };
    println!("H{} bottleneck: {value}", left.dimension);
    if outcome.distance.is_none() {
        println!(
            "  essential counts differ: {} vs {}",
            left.essential_count(),
            right.essential_count()
        );
    } else {
        print_matching(&outcome.matching, left, right);
    }
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    match args.kind {
        Some(kind) => {
            let left = io::read_graph(&args.left)?.graph;
            let right = io::read_graph(&args.right)?.graph;
            let req = |g| AnalysisRequest {
                graph: g,
                kind: kind.kind(),
                max_dim: args.dim,
                drop_zero: true,
            };
            let a = cliph_core::run(&req(&left)).diagrams;
            let b = cliph_core::run(&req(&right)).diagrams;
            for (l, r) in a.iter().zip(&b) {
                compare_pair(l, r, args.float)?;
            }
        }
        None => {
            let a = io::read_diagrams(&args.left)?;
            let b = io::read_diagrams(&args.right)?;
            let mut compared = 0usize;
            for l in &a {
                if let Some(r) = b.iter().find(|r| r.dimension == l.dimension) {
                    compare_pair(l, r, args.float)?;
                    compared += 1;
                }
            }
            if compared == 0 {
                return Err(CliError::Invalid(format!(
                    "no common dimensions between {} and {}",
                    args.left.display(),
                    args.right.display()
                )));
            }
        }
    }
    Ok(())
}

fn emit_graph(
    g: &UnweightedGraph,
    comment: &str,
    out: Option<&Path>,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            io::write_edge_list(path, g, comment)?;
            println!("{}", path.display());
        }
        None => print!("{}", io::edge_list_text(g, comment)),
    }
    Ok(())
}

fn cmd_generate(cmd: &GenerateCmd) -> Result<(), CliError> {
    match cmd {
        GenerateCmd::Sbm(args) => {
            let block_sizes = parse_blocks(&args.blocks)?;
            check_probability("--p-in", args.p_in)?;
            check_probability("--p-out", args.p_out)?;
            let spec = SbmSpec {
                block_sizes,
                p_in: args.p_in,
                p_out: args.p_out,
                seed: args.seed,
            };
            let mut g = sample_sbm(&spec);
            let mut comment = describe_sbm(&spec);
            if args.extra_edge {
                g = add_random_edge(&g, args.seed)?;
                comment.push_str(" +edge");
            }
            emit_graph(&g, &comment, args.out.as_deref())
        }
        GenerateCmd::Rgg(args) => {
            if args.n == 0 {
                return Err(CliError::Invalid("--n must be positive".into()));
            }
            if !(args.radius > 0.0 && args.radius.is_finite()) {
                return Err(CliError::Invalid("--radius must be positive".into()));
            }
            let spec =
                CircleRggSpec { n: args.n, radius: args.radius, seed: args.seed };
            let (mut g, coords) = sample_circle_rgg(&spec);
            let mut comment = format!(
                "circle rgg n={} radius={} seed={}",
                args.n, args.radius, args.seed
            );
            if args.extra_edge {
                g = add_random_edge(&g, args.seed)?;
                comment.push_str(" +edge");
            }
            if let Some(path) = &args.coords {
                io::write_coords_csv(path, &coords)?;
                println!("{}", path.display());
            }
            emit_graph(&g, &comment, args.out.as_deref())
        }
        GenerateCmd::Fixture(args) => {
            let mut g = fixture(&args.name)?;
            let mut comment = format!("fixture {}", args.name);
            if args.extra_edge {
                g = add_random_edge(&g, args.seed)?;
                comment.push_str(" +edge");
            }
            emit_graph(&g, &comment, args.out.as_deref())
        }
    }
}

fn parse_blocks(text: &str) -> Result<Vec<usize>, CliError> {
    let sizes: Result<Vec<usize>, _> =
        text.split(',').map(|t| t.trim().parse::<usize>()).collect();
    match sizes {
        Ok(sizes) if !sizes.is_empty() && sizes.iter().all(|&s| s > 0) => Ok(sizes),
        _ => Err(CliError::Invalid(format!(
            "--blocks expects comma-separated positive sizes, got {text:?}"
        ))),
    }
}

fn check_probability(flag: &str, p: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("{flag} must be within [0, 1], got {p}")))
    }
}

fn cmd_experiment(args: &ExperimentArgs) -> Result<(), CliError> {
    let ctx = ExperimentContext {
        seed: args.seed,
        out_dir: args.out.clone(),
        data_dir: args.data.clone(),
        trials: args.trials,
    };
    run_experiment(&args.name, &ctx)
}

fn cmd_plot(args: &PlotArgs) -> Result<(), CliError> {
    let mut diagrams = Vec::new();
    for path in &args.inputs {
        diagrams.extend(io::read_diagrams(path)?);
    }
    let out = match &args.out {
        Some(p) => p.clone(),
        None => args.inputs[0].with_extension("svg"),
    };
    io::write_file(&out, &render_svg(&diagrams))?;
    println!("{}", out.display());
    Ok(())
}
