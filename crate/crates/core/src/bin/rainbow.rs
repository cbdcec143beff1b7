//! Command-line front end: generators, the search pipeline, the exact
//! oracle, hypothesis validation, and the inequality checks, wired for
//! reproducible scripted runs. Stdout carries machine-readable JSON only;
//! diagnostics go to stderr. Exit codes: 0 success, 1 error or failed
//! assertion, 2 relaxed-mode not-found, 3 oracle budget exhausted.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rainbow_cycles::bounds;
use rainbow_cycles::gen;
use rainbow_cycles::girth::{bound_sparse_girth, bound_directed_girth};
use rainbow_cycles::graph::validate;
use rainbow_cycles::params::PipelineParams;
use rainbow_cycles::pipeline::{find_short_rainbow_cycle, PipelineError};
use rainbow_cycles::rainbow::{shortest_rainbow_cycle_exact, SearchError};
use rainbow_cycles::witness;
use rainbow_cycles::ColoredGraph;

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Rainbow-cycle search in edge-colored graphs")]
struct Cli {
    /// Bound internal parallelism; default is all available cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a short rainbow cycle and print the verified witness JSON.
    Find(FindArgs),
    /// Exact minimum rainbow-cycle length within a bound.
    Oracle(OracleArgs),
    /// Check the closed-form inequalities and tabulate the girth bounds.
    Bounds(BoundsArgs),
    /// Generate instances (colored graphs or digraphs).
    Gen(GenArgs),
    /// Report whether an instance satisfies the size hypotheses.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strict,
    Relaxed,
}

#[derive(Args)]
struct FindArgs {
    /// Instance file in the colored-graph text format.
    input: Option<PathBuf>,
    /// Generate the instance instead of reading a file:
    /// "equitable", "relaxed:n=10,class=3", or "circulant:n=12,fan=2".
    #[arg(long, conflicts_with = "input")]
    gen: Option<String>,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "strict")]
    mode: Mode,
    /// Override f(k) (relaxed mode only; removes every guarantee).
    #[arg(long)]
    f_override: Option<f64>,
    /// Write the provenance trace JSON here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Node-expansion budget for the bounded rainbow searches.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex cap for generated instances.
    #[arg(long, default_value_t = 4096)]
    cap: usize,
    /// Fault injection for tests: corrupt the witness before the final
    /// independent verification.
    #[arg(long, hide = true)]
    corrupt_witness: bool,
}

#[derive(Args)]
struct OracleArgs {
    input: PathBuf,
    /// Largest cycle length to consider (default: unbounded).
    #[arg(long)]
    max_len: Option<usize>,
    /// Node-expansion budget; exhausting it exits 3.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, default_value_t = bounds::DEFAULT_K_MIN)]
    k_min: f64,
    #[arg(long, default_value_t = bounds::DEFAULT_K_MAX)]
    k_max: f64,
    #[arg(long, default_value_t = bounds::DEFAULT_SAMPLES)]
    samples: usize,
    /// Run the deliberately broken variants; they must report failure.
    #[arg(long)]
    self_test: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Equitable,
    Relaxed,
    Circulant,
    Digraph,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    /// k for the equitable instance.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    class_size: Option<usize>,
    #[arg(long)]
    fan: Option<usize>,
    /// Out-degree for digraph generation.
    #[arg(long)]
    out_degree: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4096)]
    cap: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ValidateArgs {
    input: PathBuf,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value = "strict")]
    mode: Mode,
    #[arg(long)]
    f_override: Option<f64>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot set thread pool size: {e}");
            return ExitCode::from(1);
        }
    }
    let code = match cli.command {
        Command::Find(args) => cmd_find(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Validate(args) => cmd_validate(args),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn make_params(k: u32, mode: Mode, f_override: Option<f64>) -> Result<PipelineParams, String> {
    match (mode, f_override) {
        (Mode::Strict, None) => PipelineParams::strict(k).map_err(|e| e.to_string()),
        (Mode::Strict, Some(_)) => Err("--f-override requires --mode relaxed".to_string()),
        (Mode::Relaxed, None) => PipelineParams::relaxed(k).map_err(|e| e.to_string()),
        (Mode::Relaxed, Some(f)) => {
            PipelineParams::relaxed_with_f(k, f).map_err(|e| e.to_string())
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<ColoredGraph, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    rainbow_cycles::read_colored_graph(BufReader::new(file))
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses a generator spec like "relaxed:n=10,class=3".
fn gen_from_spec(spec: &str, k: u32, seed: u64, cap: usize) -> Result<ColoredGraph, String> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, r),
        None => (spec, ""),
    };
    let mut kv = std::collections::BTreeMap::new();
    for part in rest.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bad generator parameter {part:?}"))?;
        let value: usize = value
            .parse()
            .map_err(|_| format!("bad number in generator parameter {part:?}"))?;
        kv.insert(key.to_string(), value);
    }
    let get = |key: &str| -> Result<usize, String> {
        kv.get(key)
            .copied()
            .ok_or_else(|| format!("generator {name:?} needs {key}=<int>"))
    };
    match name {
        "equitable" => gen::gen_equitable_complete(k, cap).map_err(|e| e.to_string()),
        "relaxed" => gen::gen_relaxed(get("n")?, get("class")?, seed).map_err(|e| e.to_string()),
        "circulant" => gen::gen_star_circulant(get("n")?, get("fan")?).map_err(|e| e.to_string()),
        other => Err(format!(
            "unknown generator {other:?} (expected equitable, relaxed, or circulant)"
        )),
    }
}

fn cmd_find(args: FindArgs) -> Result<u8, String> {
    let g = match (&args.input, &args.gen) {
        (Some(path), None) => load_graph(path)?,
        (None, Some(spec)) => {
            eprintln!("generator: {spec} seed={} cap={}", args.seed, args.cap);
            gen_from_spec(spec, args.k, args.seed, args.cap)?
        }
        _ => return Err("provide an input file or --gen <spec>".to_string()),
    };
    let p = make_params(args.k, args.mode, args.f_override)?;
    let target = p.cycle_target(g.vertex_count());

    match find_short_rainbow_cycle(&g, &p, args.budget) {
        Ok(outcome) => {
            let mut w = outcome.witness;
            if args.corrupt_witness && !w.colors.is_empty() {
                // Fault injection: misreport the first color.
                w.colors[0] = w.colors[0] % g.palette() + 1;
            }
            if let Some(path) = &args.trace {
                let mut out = BufWriter::new(
                    File::create(path).map_err(|e| format!("{}: {e}", path.display()))?,
                );
                out.write_all(outcome.trace.to_json().as_bytes())
                    .and_then(|_| out.write_all(b"\n"))
                    .map_err(|e| e.to_string())?;
            }
            // Independent verification before exiting 0.
            if let Err(e) = witness::reverify_walk(&g, &w) {
                eprintln!("witness rejected by independent checker: {e}");
                return Ok(1);
            }
            if let Err(e) = witness::verify_in_graph(&g, &w) {
                eprintln!("witness rejected by primary checker: {e}");
                return Ok(1);
            }
            if !w.rainbow || w.length > target {
                eprintln!(
                    "witness does not meet the contract: rainbow={} length={} target={target}",
                    w.rainbow, w.length
                );
                return Ok(1);
            }
            let mut stdout = std::io::stdout().lock();
            rainbow_cycles::write_witness(&w, &mut stdout).map_err(|e| e.to_string())?;
            Ok(0)
        }
        Err(PipelineError::NotFound) => {
            eprintln!("no rainbow cycle of length <= {target} found (relaxed mode)");
            println!("{}", json!({ "result": "none" }));
            Ok(2)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(1)
        }
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, String> {
    let g = load_graph(&args.input)?;
    match shortest_rainbow_cycle_exact(&g, args.max_len, args.budget) {
        Ok(Some(w)) => {
            println!("{}", json!({ "length": w.length, "witness": w }));
            Ok(0)
        }
        Ok(None) => {
            println!("{}", json!({ "length": null }));
            Ok(0)
        }
        Err(SearchError::BudgetExceeded { expanded }) => {
            eprintln!("budget exhausted after {expanded} expansions");
            println!(
                "{}",
                json!({ "error": "budget_exhausted", "expanded": expanded })
            );
            Ok(3)
        }
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8, String> {
    let reports = if args.self_test {
        bounds::self_test_reports(args.k_min, args.k_max, args.samples)
    } else {
        bounds::standard_reports(args.k_min, args.k_max, args.samples)
    };
    let mut all_ok = true;
    for r in &reports {
        all_ok &= r.passed && r.marginal_k.is_empty();
        println!("{}", serde_json::to_string(r).map_err(|e| e.to_string())?);
    }
    for &(n, k) in &[(4u64, 2u64), (100, 4), (1205, 14), (10_000, 64)] {
        if let Ok(v) = bound_sparse_girth(n, k) {
            println!(
                "{}",
                json!({ "bound": "sparse_girth", "n": n, "k": k, "value": v })
            );
        }
        if let Ok(v) = bound_directed_girth(n, k) {
            println!(
                "{}",
                json!({ "bound": "directed_girth", "n": n, "k": k, "value": v })
            );
        }
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let out = File::create(&args.out).map_err(|e| format!("{}: {e}", args.out.display()))?;
    let mut sink = BufWriter::new(out);
    if args.kind == GenKind::Digraph {
        let n = args.n.ok_or("--n required for digraph generation")?;
        let k = args.out_degree.ok_or("--out-degree required")?;
        let d = gen::gen_min_outdeg_digraph(n, k, args.seed).map_err(|e| e.to_string())?;
        writeln!(
            sink,
            "# digraph min-out-degree={k} seed={} arcs as \"u v\" lines",
            args.seed
        )
        .map_err(|e| e.to_string())?;
        writeln!(sink, "{} {}", d.vertex_count(), d.arc_count()).map_err(|e| e.to_string())?;
        for &(u, v) in d.arcs() {
            writeln!(sink, "{u} {v}").map_err(|e| e.to_string())?;
        }
        sink.flush().map_err(|e| e.to_string())?;
        println!(
            "{}",
            json!({
                "kind": "digraph",
                "n": d.vertex_count(),
                "arcs": d.arc_count(),
                "min_out_degree": rainbow_cycles::min_out_degree(&d).map_err(|e| e.to_string())?,
                "seed": args.seed,
                "path": args.out,
            })
        );
        return Ok(0);
    }
    let (g, comment, kind_name) = match args.kind {
        GenKind::Equitable => {
            let k = args.k.ok_or("--k required for the equitable instance")?;
            let g = gen::gen_equitable_complete(k, args.cap).map_err(|e| e.to_string())?;
            (g, format!("generator: equitable k={k}"), "equitable")
        }
        GenKind::Relaxed => {
            let n = args.n.ok_or("--n required")?;
            let class_size = args.class_size.ok_or("--class-size required")?;
            let g = gen::gen_relaxed(n, class_size, args.seed).map_err(|e| e.to_string())?;
            (
                g,
                format!(
                    "generator: relaxed n={n} class_size={class_size} seed={}",
                    args.seed
                ),
                "relaxed",
            )
        }
        GenKind::Circulant => {
            let n = args.n.ok_or("--n required")?;
            let fan = args.fan.ok_or("--fan required")?;
            let g = gen::gen_star_circulant(n, fan).map_err(|e| e.to_string())?;
            (
                g,
                format!("generator: circulant n={n} fan={fan}"),
                "circulant",
            )
        }
        GenKind::Digraph => unreachable!(),
    };
    rainbow_cycles::io::write_colored_graph_with_comments(&g, &mut sink, &[comment])
        .map_err(|e| e.to_string())?;
    sink.flush().map_err(|e| e.to_string())?;

    let sizes = g.class_sizes();
    let min_class = sizes.iter().copied().min().unwrap_or(0);
    let strict_valid = args
        .k
        .and_then(|k| PipelineParams::strict(k).ok())
        .map(|p| validate(&g, &p).overall);
    println!(
        "{}",
        json!({
            "kind": kind_name,
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "min_class_size": min_class,
            "strict_valid": strict_valid,
            "seed": args.seed,
            "path": args.out,
        })
    );
    Ok(0)
}

fn cmd_validate(args: ValidateArgs) -> Result<u8, String> {
    let g = load_graph(&args.input)?;
    let p = make_params(args.k, args.mode, args.f_override)?;
    let report = validate(&g, &p);
    println!(
        "{}",
        serde_json::to_string(&report).map_err(|e| e.to_string())?
    );
    Ok(0)
}
