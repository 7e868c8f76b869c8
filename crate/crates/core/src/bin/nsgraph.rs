use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nsgraph::anneal::{AnnealConfig, Metric, Schedule, Scheme};
use nsgraph::distance::{spectral_distance, walk_distance};
use nsgraph::indices::{fast, oracle, GraphIndices};
use nsgraph::io::{parse_edge_list, EdgeList};
use nsgraph::report::{approximate, digest};
use nsgraph::{CompactCreationSequence, CreationSequence};

#[derive(Parser)]
#[command(
    name = "nsgraph",
    version,
    about = "Nested split graph approximation and indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Anneal toward the closest NSG to an edge-list graph.
    Approximate(ApproximateArgs),
    /// Print the graph indices of a compact sequence or an edge list.
    Indices(IndicesArgs),
    /// Print the distance between two edge-list graphs.
    Distance(DistanceArgs),
    /// Check a sequence and print its canonical forms.
    Validate(SequenceInput),
}

#[derive(Args)]
struct ApproximateArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "spectral")]
    distance: MetricArg,
    #[arg(long, value_enum, default_value = "hamming")]
    perturbation: SchemeArg,
    #[arg(long, default_value_t = 1e2)]
    t0: f64,
    #[arg(long, default_value_t = 1e-7)]
    t1: f64,
    #[arg(long, default_value_t = 1_000_000)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent chains run in parallel (seeds seed, seed+1, ...).
    #[arg(long, default_value_t = 1)]
    runs: usize,
    /// Steps per timeline sample (default: steps / 100).
    #[arg(long)]
    window: Option<usize>,
    /// Output directory for report.csv, indices.csv and timeline.csv.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct IndicesArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Full-precision CSV instead of the 4-significant-figure listing.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Compact creation sequence, e.g. 1,1,1,1,7,1.
    #[arg(long)]
    compact: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct DistanceArgs {
    first: PathBuf,
    second: PathBuf,
    #[arg(long, value_enum, default_value = "spectral")]
    metric: MetricArg,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SequenceInput {
    #[arg(long)]
    compact: Option<String>,
    /// Minimum representation: the n - 2 interior bits.
    #[arg(long)]
    bits: Option<String>,
    /// All n bits, including the leading 0 and trailing 1.
    #[arg(long)]
    full_bits: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Walk,
    Spectral,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Hamming,
    Edge,
    Move,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fast,
    Oracle,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Walk => Metric::Walk,
            MetricArg::Spectral => Metric::Spectral,
        }
    }
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Hamming => Scheme::Hamming,
            SchemeArg::Edge => Scheme::Edge,
            SchemeArg::Move => Scheme::Move,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Approximate(args) => run_approximate(args),
        Command::Indices(args) => run_indices(args),
        Command::Distance(args) => run_distance(args),
        Command::Validate(args) => run_validate(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                nsgraph::Error::InvalidConfig(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load(path: &PathBuf) -> nsgraph::Result<(EdgeList, String)> {
    let text = fs::read_to_string(path)?;
    let list = parse_edge_list(&text)?;
    for d in &list.duplicates {
        eprintln!(
            "warning: {}:{}: duplicate edge {} {} ignored",
            path.display(),
            d.line,
            d.u,
            d.v
        );
    }
    Ok((list, text))
}

fn run_approximate(args: ApproximateArgs) -> nsgraph::Result<()> {
    let (input, text) = load(&args.graph)?;
    let mut config = AnnealConfig::new(
        args.perturbation.into(),
        args.distance.into(),
        Schedule::new(args.t0, args.t1, args.steps)?,
        args.seed,
    );
    config.window = args.window;
    let (report, outcome) = approximate(&input, &digest(&text), &config, args.runs)?;

    fs::create_dir_all(&args.out)?;
    report.write_summary_csv(BufWriter::new(File::create(args.out.join("report.csv"))?))?;
    report.write_indices_csv(BufWriter::new(File::create(args.out.join("indices.csv"))?))?;
    outcome
        .timeline
        .write_csv(BufWriter::new(File::create(args.out.join("timeline.csv"))?))?;

    println!("best_compact={}", report.best);
    println!("best_energy={}", report.best_energy);
    print_indices(&report.nsg_indices, false);
    Ok(())
}

fn run_indices(args: IndicesArgs) -> nsgraph::Result<()> {
    let indices = match (&args.input.compact, &args.input.graph) {
        (Some(s), _) => {
            let a: CompactCreationSequence = s.parse()?;
            match args.mode.unwrap_or(Mode::Fast) {
                Mode::Fast => fast::indices(&a),
                Mode::Oracle => oracle::indices(&a.to_graph())?,
            }
        }
        (None, Some(path)) => {
            let (input, _) = load(path)?;
            match args.mode.unwrap_or(Mode::Oracle) {
                Mode::Oracle => oracle::indices(&input.graph)?,
                Mode::Fast => {
                    let c = CreationSequence::recognize(&input.graph).ok_or_else(|| {
                        nsgraph::Error::InvalidSequence(
                            "graph is not a connected nested split graph".into(),
                        )
                    })?;
                    fast::indices(&c.to_compact())
                }
            }
        }
        (None, None) => unreachable!("clap enforces one input"),
    };
    print_indices(&indices, args.csv);
    Ok(())
}

fn print_indices(indices: &GraphIndices, csv: bool) {
    if csv {
        println!("{}", GraphIndices::NAMES.join(","));
        println!("{}", indices.full_precision().join(","));
    } else {
        print!("{indices}");
    }
}

fn run_distance(args: DistanceArgs) -> nsgraph::Result<()> {
    let (g1, _) = load(&args.first)?;
    let (g2, _) = load(&args.second)?;
    let d = match Metric::from(args.metric) {
        Metric::Walk => walk_distance(&g1.graph, &g2.graph)?,
        Metric::Spectral => spectral_distance(&g1.graph, &g2.graph)?,
    };
    println!("{d:.6}");
    Ok(())
}

fn run_validate(args: SequenceInput) -> nsgraph::Result<()> {
    let c = if let Some(s) = &args.compact {
        s.parse::<CompactCreationSequence>()?.to_creation_sequence()
    } else if let Some(s) = &args.bits {
        CreationSequence::from_minimum_representation(s)?
    } else if let Some(s) = &args.full_bits {
        CreationSequence::from_full_bits(s)?
    } else {
        unreachable!("clap enforces one input")
    };
    let a = c.to_compact();
    println!("compact={a}");
    println!("minimum={}", c.minimum_representation());
    println!("full={}", c.full_bits());
    println!("vertices={}", c.len());
    println!("cells={}", a.cell_count());
    println!("edges={}", fast::edge_count(&a));
    Ok(())
}
