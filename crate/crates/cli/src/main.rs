use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use immersion::generate::{random_eulerian_digraph, random_multigraph, simple_eulerian_min_outdeg, Family};
use immersion::{
    brute_force_immersion, build_gomory_hu, decompose_directed, decompose_undirected, parse_graph,
    verify_certificate, verify_decomposition, ImmersionCertificate, LaminarDecomposition,
    Mode, MultiGraph, OracleLimits, Outcome,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Laminar cut decompositions and clique immersions of multigraphs and
/// Eulerian digraphs.
///
/// Exit status: 0 on success (a decomposition and a certificate are both
/// successes), 1 when a verifier rejects an artifact, 2 on any other error.
#[derive(Parser)]
#[command(name = "immersion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline: a laminar decomposition or a clique immersion.
    Decompose(Solve),
    /// Exhaustive immersion search for hosts with few edges.
    Find {
        #[command(flatten)]
        solve: Solve,
        /// Largest number of non-loop edges to search.
        #[arg(long, default_value_t = OracleLimits::default().max_edges)]
        max_edges: usize,
    },
    /// Check a certificate against a graph.
    VerifyCert(Verify),
    /// Check a decomposition against a graph.
    VerifyDec(Verify),
    /// Print the Gomory-Hu tree of an undirected graph as `a b mu` lines.
    GomoryHu {
        #[command(flatten)]
        io: GraphIo,
    },
    /// Generate a random instance.
    Gen(Generate),
}

#[derive(Args)]
struct GraphIo {
    /// Graph file; `-` or absent reads stdin.
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file; absent writes stdout.
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Solve {
    /// Clique order.
    #[arg(long)]
    t: usize,
    /// Defaults to the kind named in the graph header.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[command(flatten)]
    io: GraphIo,
}

#[derive(Args)]
struct Verify {
    /// Certificate or decomposition JSON, bare or as written by `decompose`.
    #[arg(long, value_name = "PATH")]
    artifact: PathBuf,
    /// Check against this order instead of the one recorded in the artifact.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[command(flatten)]
    io: GraphIo,
}

#[derive(Args)]
struct Generate {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Edge count for the random families.
    #[arg(long)]
    m: Option<usize>,
    /// Minimum out-degree for `simple-eulerian-min-outdeg`.
    #[arg(long)]
    floor: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Undirected,
    Directed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Undirected => Mode::Undirected,
            ModeArg::Directed => Mode::Directed,
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("cannot read stdin")?;
            Ok(text)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("cannot write stdout"),
    }
}

fn load_graph(io: &GraphIo, mode: Option<ModeArg>) -> Result<(MultiGraph, Mode)> {
    let text = read_input(io.input.as_deref())?;
    let g = parse_graph(&text).context("cannot parse graph")?;
    let header = Mode::of(g.is_directed());
    if let Some(m) = mode {
        if Mode::from(m) != header {
            bail!(
                "--mode {} does not match the `{}` header",
                m.to_possible_value().expect("no skipped variants").get_name(),
                if g.is_directed() { "digraph" } else { "graph" }
            );
        }
    }
    Ok((g, header))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

fn decompose(args: &Solve) -> Result<ExitCode> {
    let (g, mode) = load_graph(&args.io, args.mode)?;
    let outcome = match mode {
        Mode::Undirected => decompose_undirected(&g, args.t)?,
        Mode::Directed => decompose_directed(&g, args.t)?,
    };
    write_output(args.io.output.as_deref(), &to_json(&outcome)?)?;
    Ok(ExitCode::SUCCESS)
}

fn find(args: &Solve, max_edges: usize) -> Result<ExitCode> {
    let (g, mode) = load_graph(&args.io, args.mode)?;
    let found = brute_force_immersion(args.t, &g, mode.is_directed(), OracleLimits { max_edges })?;
    let text = match found {
        Some(cert) => to_json(&Outcome::Certificate(cert))?,
        None => to_json(&serde_json::json!({ "kind": "none", "t": args.t }))?,
    };
    write_output(args.io.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn read_artifact<T: serde::de::DeserializeOwned>(path: &Path, kind: &str) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("artifact is not JSON")?;
    let tagged = value.get("kind").and_then(|k| k.as_str()).map(str::to_owned);
    let value = match tagged.as_deref() {
        Some(k) if k == kind => {
            let mut body = value;
            body.as_object_mut().expect("has a kind field").remove("kind");
            body
        }
        Some(other) => bail!("artifact holds a {other}, expected a {kind}"),
        None => value,
    };
    serde_json::from_value(value).with_context(|| format!("artifact is not a valid {kind}"))
}

fn report(result: Result<(), impl std::fmt::Display>, what: &str) -> ExitCode {
    match result {
        Ok(()) => {
            println!("{what} ok");
            ExitCode::SUCCESS
        }
        Err(violation) => {
            println!("{what} rejected: {violation}");
            ExitCode::from(1)
        }
    }
}

fn verify_cert(args: &Verify) -> Result<ExitCode> {
    let (g, _) = load_graph(&args.io, args.mode)?;
    let cert: ImmersionCertificate = read_artifact(&args.artifact, "certificate")?;
    if let Some(t) = args.t {
        if t != cert.t {
            println!("certificate rejected: it is for t={}, not t={t}", cert.t);
            return Ok(ExitCode::from(1));
        }
    }
    Ok(report(verify_certificate(&g, &cert), "certificate"))
}

fn verify_dec(args: &Verify) -> Result<ExitCode> {
    let (g, mode) = load_graph(&args.io, args.mode)?;
    let dec: LaminarDecomposition = read_artifact(&args.artifact, "decomposition")?;
    let t = args.t.unwrap_or(dec.t);
    Ok(report(verify_decomposition(&g, t, mode, &dec), "decomposition"))
}

fn gomory_hu(io: &GraphIo) -> Result<ExitCode> {
    let (g, _) = load_graph(io, None)?;
    let tree = build_gomory_hu(&g)?;
    write_output(io.output.as_deref(), &tree.dump())?;
    Ok(ExitCode::SUCCESS)
}

fn generate(args: &Generate) -> Result<ExitCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let need_m = || args.m.with_context(|| format!("--m is required for {}", args.family));
    let g = match args.family {
        Family::RandomMultigraph => random_multigraph(args.n, need_m()?, &mut rng)?,
        Family::RandomEulerianDigraph => random_eulerian_digraph(args.n, need_m()?, &mut rng)?,
        Family::SimpleEulerianMinOutdeg => {
            let floor = args.floor.context("--floor is required for simple-eulerian-min-outdeg")?;
            simple_eulerian_min_outdeg(args.n, floor, &mut rng)?
        }
    };
    if g.is_directed() && !g.is_eulerian() {
        bail!("generated digraph is not balanced");
    }
    write_output(args.output.as_deref(), &g.to_edge_list())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Decompose(args) => decompose(args),
        Command::Find { solve, max_edges } => find(solve, *max_edges),
        Command::VerifyCert(args) => verify_cert(args),
        Command::VerifyDec(args) => verify_dec(args),
        Command::GomoryHu { io } => gomory_hu(io),
        Command::Gen(args) => generate(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
