use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgedepth::campaign::{self, ExperimentConfig};
use edgedepth::io::{betti_to_json, read_graph, read_ideal, read_to_string, Reproducer};
use edgedepth_core::verify::{
    check_edge_ideal_bound, check_mixed_bound, check_packing_deletion_lemmas,
    check_symbolic_depth_bound, report_colon_identity, report_forest_power_coincidence,
    CheckKind, PackingLemma, VerificationReport,
};
use edgedepth_core::{
    betti_table, edge_ideal, symbolic_power, Chordality, FieldSpec, Graph, VertexSet,
};

#[derive(Parser)]
#[command(name = "edgedepth", version, about = "Depth of edge ideals and their symbolic powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Star packing number with a witness set of centers.
    Alpha2 { graph: PathBuf },
    /// Exact depth of S/I.
    Depth(DepthArgs),
    /// Minimal generators of the edge ideal.
    EdgeIdeal { graph: PathBuf },
    /// Minimal generators of the s-th symbolic power of the edge ideal.
    SymbolicPower {
        graph: PathBuf,
        #[arg(short, long)]
        s: i64,
    },
    /// Minimal vertex covers, one per line.
    Covers { graph: PathBuf },
    /// Chordality, with an elimination order or an induced cycle.
    Chordal { graph: PathBuf },
    /// Run one check on one instance.
    Verify(VerifyArgs),
    /// Run a campaign described by a JSON config.
    Experiment {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true))]
struct DepthArgs {
    /// Ideal file: text `(x1*x2, ...)` or JSON `{"n":..,"generators":[..]}`.
    #[arg(long, group = "source")]
    ideal: Option<PathBuf>,
    /// Number of variables for a text ideal (default: largest index used).
    #[arg(long, requires = "ideal")]
    vars: Option<usize>,
    /// Graph file; its edge ideal is used.
    #[arg(long, group = "source")]
    graph: Option<PathBuf>,
    /// Take the s-th ordinary power first.
    #[arg(long, conflicts_with = "symbolic")]
    power: Option<i64>,
    /// Take the s-th symbolic power of the edge ideal (graphs only).
    #[arg(long, requires = "graph")]
    symbolic: Option<i64>,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    /// Print the multigraded Betti table as JSON instead.
    #[arg(long)]
    betti: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "cor22")]
    EdgeIdealBound,
    #[value(name = "thm34")]
    ChordalSymbolic,
    #[value(name = "thm42")]
    SecondSymbolic,
    #[value(name = "lem41")]
    ColonIdentity,
    #[value(name = "prop33")]
    MixedChordal,
    #[value(name = "lem31")]
    NeighborhoodDeletion,
    #[value(name = "lem32")]
    CliqueDeletion,
    #[value(name = "forest")]
    Forest,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// The power s (k for lem41).
    #[arg(short, long)]
    s: Option<i64>,
    /// H for prop33.
    #[arg(long)]
    h: Option<PathBuf>,
    /// H' for prop33.
    #[arg(long)]
    h_prime: Option<PathBuf>,
    /// Edge `u,v` for lem41.
    #[arg(long, value_delimiter = ',')]
    edge: Vec<usize>,
    /// W for lem31/lem32, comma separated; lem32 reads the first as x1.
    #[arg(long, value_delimiter = ',')]
    w: Vec<usize>,
    /// A for lem31/lem32, comma separated.
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    /// Directory for the reproducer written on a guaranteed violation.
    #[arg(long, default_value = ".")]
    reproducers: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}

fn field(c: u32) -> anyhow::Result<FieldSpec> {
    Ok(FieldSpec::from_characteristic(c)?)
}

fn graph(path: &Path) -> anyhow::Result<Graph> {
    Ok(read_graph(path)?)
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Alpha2 { graph: path } => {
            let (alpha, packing) = graph(&path)?.star_packing_number();
            println!("{}  witness: {}", alpha, packing.centers);
        }
        Command::Depth(args) => depth(args)?,
        Command::EdgeIdeal { graph: path } => println!("{}", edge_ideal(&graph(&path)?)),
        Command::SymbolicPower { graph: path, s } => println!("{}", symbolic_power(&graph(&path)?, s)?),
        Command::Covers { graph: path } => {
            for c in graph(&path)?.minimal_vertex_covers() {
                println!("{}", c);
            }
        }
        Command::Chordal { graph: path } => match graph(&path)?.chordality() {
            Chordality::Chordal { elimination_order } => {
                println!("chordal  elimination order: {:?}", elimination_order)
            }
            Chordality::NotChordal { induced_cycle } => {
                println!("not chordal  induced cycle: {:?}", induced_cycle)
            }
        },
        Command::Verify(args) => return verify(args),
        Command::Experiment { config } => return experiment(&config),
    }
    Ok(ExitCode::SUCCESS)
}

fn depth(args: DepthArgs) -> anyhow::Result<()> {
    let f = field(args.characteristic)?;
    let ideal = match (&args.ideal, &args.graph) {
        (Some(path), _) => read_ideal(path, args.vars)?,
        (None, Some(path)) => {
            let g = graph(path)?;
            match args.symbolic {
                Some(s) => symbolic_power(&g, s)?,
                None => edge_ideal(&g),
            }
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let ideal = match args.power {
        Some(s) => ideal.power(s)?,
        None => ideal,
    };
    let table = betti_table(&ideal, f)?;
    if args.betti {
        println!("{}", betti_to_json(&table));
    } else {
        println!("{}", table.depth());
    }
    Ok(())
}

fn need<T>(value: Option<T>, flag: &str, theorem: &str) -> anyhow::Result<T> {
    value.with_context(|| format!("{} needs {}", theorem, flag))
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let f = field(args.characteristic)?;
    let name = args.theorem.to_possible_value().expect("named variant").get_name().to_string();
    let load = |p: &Option<PathBuf>, flag: &str| -> anyhow::Result<Graph> {
        graph(need(p.as_deref(), flag, &name)?)
    };
    let mut report = match args.theorem {
        Theorem::EdgeIdealBound => check_edge_ideal_bound(&load(&args.graph, "--graph")?, f)?,
        Theorem::ChordalSymbolic => {
            let s = need(args.s, "-s", &name)?;
            check_symbolic_depth_bound(&load(&args.graph, "--graph")?, s, true, f)?
        }
        Theorem::SecondSymbolic => {
            if args.s.is_some_and(|s| s != 2) {
                bail!("thm42 is about s = 2");
            }
            check_symbolic_depth_bound(&load(&args.graph, "--graph")?, 2, false, f)?
        }
        Theorem::ColonIdentity => {
            let g = load(&args.graph, "--graph")?;
            let [u, v] = <[usize; 2]>::try_from(args.edge.as_slice())
                .map_err(|_| anyhow::anyhow!("lem41 needs --edge u,v"))?;
            report_colon_identity(&g, (u, v), args.s.unwrap_or(2))?
        }
        Theorem::MixedChordal => {
            let s = need(args.s, "-s", &name)?;
            check_mixed_bound(&load(&args.h, "--h")?, &load(&args.h_prime, "--h-prime")?, s, f)?
        }
        Theorem::NeighborhoodDeletion | Theorem::CliqueDeletion => {
            let g = load(&args.graph, "--graph")?;
            let a: VertexSet = args.a.iter().copied().collect();
            if let Some(&v) = args.a.iter().find(|&&v| v >= g.n()) {
                bail!("vertex {} in --a is out of range", v);
            }
            let lemma = if matches!(args.theorem, Theorem::NeighborhoodDeletion) {
                PackingLemma::NeighborhoodDeletion
            } else {
                PackingLemma::CliqueDeletion
            };
            check_packing_deletion_lemmas(&g, &args.w, a, lemma)?
        }
        Theorem::Forest => {
            let s = need(args.s, "-s", &name)?;
            report_forest_power_coincidence(&load(&args.graph, "--graph")?, s)?
        }
    };
    report.id = name;
    println!("{}", report_line(&report));
    if report.is_guaranteed_violation() {
        let path = Reproducer::from_report(&report).write_to(&args.reproducers)?;
        eprintln!("guaranteed bound violated; reproducer written to {}", path.display());
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn report_line(r: &VerificationReport) -> String {
    let mut parts = vec![r.check.name().to_string()];
    if let Some(g) = &r.graph {
        parts.push(format!("n={}", g.n()));
    }
    let mut field = |key: &str, v: Option<i64>| {
        if let Some(v) = v {
            parts.push(format!("{}={}", key, v));
        }
    };
    field("s", r.s);
    field("alpha2", r.alpha2.map(|a| a as i64));
    let measured = match r.check {
        CheckKind::NeighborhoodDeletion | CheckKind::CliqueDeletion => "alpha2_after",
        _ => "depth",
    };
    field(measured, r.value);
    field("bound", r.bound);
    field("slack", r.slack);
    parts.push(format!("verdict={}", r.verdict.name()));
    parts.push(format!("mode={}", r.mode.name()));
    parts.push(format!("char={}", r.characteristic));
    parts.join(" ")
}

fn experiment(config: &Path) -> anyhow::Result<ExitCode> {
    let cfg = ExperimentConfig::from_json(&read_to_string(config)?)
        .with_context(|| format!("reading {}", config.display()))?;
    let out = campaign::run(&cfg)?;
    let violated = out.guaranteed_violations().count();
    println!(
        "{}: {} instances, {} reports, {} guaranteed violations, {} exploratory violations, {} errors",
        cfg.suite.name(),
        out.instances,
        out.reports.len(),
        violated,
        out.exploratory_violations().count(),
        out.errors.len()
    );
    if cfg.cross_check {
        let c = &out.cross_check;
        println!(
            "cross-check: {} Taylor comparisons ({} skipped), {} characteristic comparisons, {} mismatches",
            c.taylor_checked,
            c.taylor_skipped,
            c.char_checked,
            c.mismatches.len()
        );
        for m in &c.mismatches {
            eprintln!("mismatch: {}", m);
        }
    }
    for (id, e) in &out.errors {
        eprintln!("{}: {}", id, e);
    }
    for p in &out.reproducers {
        eprintln!("reproducer written to {}", p.display());
    }
    Ok(if violated > 0 {
        ExitCode::from(2)
    } else if !out.errors.is_empty() || !out.cross_check.mismatches.is_empty() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
