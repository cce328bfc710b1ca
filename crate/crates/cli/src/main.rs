use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphstring_bench::{
    run_correlation, run_neighborhood, run_scaling, sparse_random_corpus, write_histogram_csv,
    write_neighborhood_csv, write_pairs_csv, write_scaling_csv, ExperimentConfig, Method,
    NamedGraph, ScalingConfig, ScalingMethod, Summary,
};
use graphstring_core::{
    canonical_string_with, ged_exact, generate, graph_to_string_greedy, levenshtein,
    parse_edgelist, serialize_edgelist, string_to_graph, CanonicalOptions, EditKind, Family, Graph,
    GraphSpec, SearchMode, DEFAULT_GED_CAP,
};

#[derive(Parser)]
#[command(
    name = "graphstring",
    version,
    about = "Encode graphs as instruction strings and compare them"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Worker threads for pairwise edit distances.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode an edge-list graph as an instruction string.
    Encode {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = EncodeMethod::GreedyMin)]
        method: EncodeMethod,
        /// Start node for `greedy`.
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Decode an instruction string into an edge list.
    Decode {
        #[arg(long)]
        string: String,
        #[arg(long)]
        directed: bool,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the canonical string of an edge-list graph.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
        /// Search-node budget.
        #[arg(long)]
        budget: Option<u64>,
        /// Branch over every applicable move, not only neighbour choices.
        #[arg(long)]
        strict: bool,
    },
    /// Levenshtein distance between two encodings, and the exact edit
    /// distance when both graphs are small enough.
    Dist {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = EncodeMethod::Canonical)]
        method: EncodeMethod,
    },
    /// Correlation between string distance and exact edit distance.
    BenchCorr(CorrArgs),
    /// Encoding time against graph size.
    BenchScale(ScaleArgs),
    /// Single-edit neighbourhood of a graph (the house graph by default).
    Neighborhood {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// `m` for Barabási-Albert, `p` for Erdős-Rényi.
        #[arg(long, default_value_t = 0.0)]
        param: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CorrArgs {
    /// Edge-list files; a sparse random corpus is generated when none given.
    #[arg(long = "in", num_args = 1..)]
    inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = 30)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [EncodeMethod::Canonical, EncodeMethod::GreedyMin, EncodeMethod::GreedyRnd])]
    methods: Vec<EncodeMethod>,
    /// Seconds per canonical encoding.
    #[arg(long, default_value_t = 60.0)]
    timeout: f64,
    /// Directory for pairs.csv, histogram.csv and summary.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScaleArgs {
    #[arg(long, default_value_t = 5)]
    min_n: usize,
    /// Largest size for the greedy encoders.
    #[arg(long, default_value_t = 30)]
    max_n: usize,
    /// Largest size for the canonical encoder.
    #[arg(long, default_value_t = 12)]
    canonical_max_n: usize,
    #[arg(long, default_value_t = 5)]
    instances: usize,
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    /// Seconds per encoding.
    #[arg(long, default_value_t = 60.0)]
    timeout: f64,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [EncodeMethod::GreedyRnd, EncodeMethod::GreedyMin, EncodeMethod::Canonical])]
    methods: Vec<EncodeMethod>,
    /// Directory for scaling.csv and summary.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EncodeMethod {
    /// Greedy from `--start`.
    Greedy,
    GreedyMin,
    GreedyRnd,
    Canonical,
}

impl EncodeMethod {
    fn bench_method(self) -> Result<Method, String> {
        match self {
            EncodeMethod::Greedy => {
                Err("method 'greedy' needs a start node; use greedy-min or greedy-rnd".into())
            }
            EncodeMethod::GreedyMin => Ok(Method::GreedyMin),
            EncodeMethod::GreedyRnd => Ok(Method::GreedyRnd),
            EncodeMethod::Canonical => Ok(Method::Canonical),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Star,
    Wheel,
    RandomTree,
    Petersen,
    House,
    Ba,
    Er,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
            FamilyArg::Complete => Family::Complete,
            FamilyArg::Star => Family::Star,
            FamilyArg::Wheel => Family::Wheel,
            FamilyArg::RandomTree => Family::RandomTree,
            FamilyArg::Petersen => Family::Petersen,
            FamilyArg::House => Family::House,
            FamilyArg::Ba => Family::BarabasiAlbert,
            FamilyArg::Er => Family::ErdosRenyi,
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_edgelist(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_text(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn create(dir: &Path, name: &str) -> Result<fs::File, String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(name);
    fs::File::create(&path).map_err(|e| format!("{}: {e}", path.display()))
}

fn timeout(secs: f64) -> Result<Duration, String> {
    Duration::try_from_secs_f64(secs)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| format!("timeout must be a positive number of seconds, got {secs}"))
}

fn encode(g: &Graph, method: EncodeMethod, start: usize, seed: u64) -> Result<String, String> {
    match method {
        EncodeMethod::Greedy => graph_to_string_greedy(g, start)
            .map(|r| r.string)
            .map_err(|e| e.to_string()),
        m => m
            .bench_method()?
            .encode(g, seed, None)
            .map_err(|e| e.to_string()),
    }
}

fn execute(cli: Cli) -> Result<(), String> {
    let seed = cli.seed;
    let jobs = cli.jobs as usize;
    match cli.command {
        Command::Encode {
            input,
            method,
            start,
        } => {
            let g = read_graph(&input)?;
            println!("{}", encode(&g, method, start, seed)?);
        }
        Command::Decode {
            string,
            directed,
            out,
        } => {
            let g = string_to_graph(&string, directed).map_err(|e| e.to_string())?;
            write_text(out.as_deref(), &serialize_edgelist(&g))?;
        }
        Command::Canon {
            input,
            budget,
            strict,
        } => {
            let g = read_graph(&input)?;
            let mut opts = CanonicalOptions::default();
            if budget.is_some() {
                opts.budget = budget;
            }
            if strict {
                opts.mode = SearchMode::Strict;
            }
            println!(
                "{}",
                canonical_string_with(&g, &opts)
                    .map_err(|e| e.to_string())?
                    .w_star
            );
        }
        Command::Dist { a, b, method } => {
            let (ga, gb) = (read_graph(&a)?, read_graph(&b)?);
            let (wa, wb) = (encode(&ga, method, 0, seed)?, encode(&gb, method, 0, seed)?);
            println!("levenshtein {}", levenshtein(&wa, &wb));
            if !ga.is_directed()
                && !gb.is_directed()
                && ga.node_count().max(gb.node_count()) <= DEFAULT_GED_CAP
            {
                println!(
                    "ged {}",
                    ged_exact(&ga, &gb, DEFAULT_GED_CAP).map_err(|e| e.to_string())?
                );
            }
        }
        Command::BenchCorr(args) => bench_corr(args, seed, jobs)?,
        Command::BenchScale(args) => bench_scale(args, seed)?,
        Command::Neighborhood { input, out } => {
            let base = match input {
                Some(p) => read_graph(&p)?,
                None => generate(&GraphSpec::new(Family::House, 5)).map_err(|e| e.to_string())?,
            };
            let r = run_neighborhood(&base).map_err(|e| e.to_string())?;
            if let Some(dir) = out {
                write_neighborhood_csv(create(&dir, "neighborhood.csv")?, &r)
                    .map_err(|e| e.to_string())?;
            }
            println!("base {}", r.base_canonical);
            println!(
                "edit neighbours {} ({} deletions, {} insertions, {} up to isomorphism)",
                r.edits.len(),
                r.count(EditKind::Delete),
                r.count(EditKind::Insert),
                r.distinct_edit_classes()
            );
            if let Some((lo, hi)) = r.lev_range() {
                println!("levenshtein range {lo}..={hi}");
            }
            let geds: Vec<usize> = r.strings.iter().filter_map(|s| s.ged).collect();
            println!(
                "string neighbours {} (ged {}..={}, {} beyond 2)",
                r.strings.len(),
                geds.iter().min().unwrap_or(&0),
                geds.iter().max().unwrap_or(&0),
                r.strings.iter().filter(|s| s.exceeds_locality()).count()
            );
        }
        Command::Gen {
            family,
            n,
            param,
            out,
        } => {
            let spec = GraphSpec::new(family.into(), n)
                .with_param(param)
                .with_seed(seed);
            let g = generate(&spec).map_err(|e| e.to_string())?;
            write_text(out.as_deref(), &serialize_edgelist(&g))?;
        }
    }
    Ok(())
}

fn bench_corr(args: CorrArgs, seed: u64, jobs: usize) -> Result<(), String> {
    let corpus = if args.inputs.is_empty() {
        sparse_random_corpus(args.count, args.min_n, args.max_n, seed).map_err(|e| e.to_string())?
    } else {
        args.inputs
            .iter()
            .map(|p| Ok(NamedGraph::new(p.display().to_string(), read_graph(p)?)))
            .collect::<Result<Vec<_>, String>>()?
    };
    let mut methods = args
        .methods
        .iter()
        .map(|m| m.bench_method())
        .collect::<Result<Vec<_>, _>>()?;
    methods.dedup();
    let cfg = ExperimentConfig {
        corpus,
        methods,
        seed,
        timeout: timeout(args.timeout)?,
        jobs,
        ..ExperimentConfig::default()
    };
    let run = run_correlation(&cfg).map_err(|e| e.to_string())?;
    let summary = Summary::new(seed).with_correlation(&run.reports);
    if let Some(dir) = &args.out {
        write_pairs_csv(create(dir, "pairs.csv")?, &run).map_err(|e| e.to_string())?;
        write_histogram_csv(create(dir, "histogram.csv")?, &run.reports)
            .map_err(|e| e.to_string())?;
        summary
            .write_json(create(dir, "summary.json")?)
            .map_err(|e| e.to_string())?;
    }
    for s in &summary.correlation {
        match (s.rho, s.p_value, s.beta) {
            (Some(rho), Some(p), Some(beta)) => println!(
                "{}: pairs {} rho {rho:.4} p {p:.3e} beta {beta:.4}",
                s.method, s.pair_count
            ),
            _ => println!("{}: pairs {} {}", s.method, s.pair_count, s.status),
        }
    }
    Ok(())
}

fn bench_scale(args: ScaleArgs, seed: u64) -> Result<(), String> {
    if args.min_n > args.max_n.max(args.canonical_max_n) {
        return Err("min-n exceeds every max size".into());
    }
    let methods = args
        .methods
        .iter()
        .map(|m| {
            let m = m.bench_method()?;
            let hi = if m == Method::Canonical {
                args.canonical_max_n
            } else {
                args.max_n
            };
            Ok(ScalingMethod::builtin(m, (args.min_n..=hi).collect()))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let cfg = ScalingConfig {
        methods,
        instances: args.instances,
        repeats: args.repeats,
        timeout: timeout(args.timeout)?,
        seed,
        ..ScalingConfig::default()
    };
    let report = run_scaling(&cfg).map_err(|e| e.to_string())?;
    let summary = Summary::new(seed).with_scaling(&report);
    if let Some(dir) = &args.out {
        write_scaling_csv(create(dir, "scaling.csv")?, &report.rows).map_err(|e| e.to_string())?;
        summary
            .write_json(create(dir, "summary.json")?)
            .map_err(|e| e.to_string())?;
    }
    for s in &summary.scaling {
        let alpha = s.alpha.map_or("n/a".into(), |a| format!("{a:.3}"));
        let r2 = s.r2.map_or("n/a".into(), |r| format!("{r:.3}"));
        let timed_out = s.first_timeout.map_or("none".into(), |n| n.to_string());
        println!(
            "{}: alpha {alpha} r2 {r2} points {} first timeout {timed_out}",
            s.method, s.points
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
