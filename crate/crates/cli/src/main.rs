use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use wormlab::bounds::{bound_chain, counting_bound, BoundChainReport, CountingBound};
use wormlab::graph::{generate, Family};
use wormlab::pattern::{bicover_max, enumerate_copies, parse_pattern};
use wormlab::verify::{
    probe_conjecture, regression_suite, run_theorem_case, scan_stream, Conjecture, Statistic,
    TheoremCase, CASE_IDS,
};
use wormlab::{solve, Coloring, Goal, Graph, Pattern, VertexSet, WormInstance};

/// Exact search and verification for vertex colorings with no monochromatic
/// copy of M and no rainbow copy of R.
///
/// Exit status: 0 on success, 1 for a negative answer (no coloring, a failed
/// case, a counterexample), 2 for usage or input errors.
#[derive(Parser)]
#[command(name = "wormlab", version)]
struct Cli {
    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a coloring exists.
    Exists {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        pair: PatternPair,
    },
    /// Compute W-, W+ and the spectrum (all three when no flag is given).
    Solve {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        pair: PatternPair,
        #[arg(long)]
        w_minus: bool,
        #[arg(long)]
        w_plus: bool,
        #[arg(long)]
        spectrum: bool,
    },
    /// The bound chain m- <= W- <= W+ <= r+ with the counting and
    /// neighborhood bounds.
    Bound {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        pair: PatternPair,
    },
    /// Count (and optionally list) the copies of a pattern.
    Copies {
        #[command(flatten)]
        graph: GraphInput,
        /// Pattern, e.g. P4, C4, K3, K1,3, K2,3, g6:Bw.
        #[arg(short, long)]
        pattern: String,
        #[arg(long)]
        list: bool,
    },
    /// Maximum number of copies bi-covered by an s-set.
    Bicover {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(short, long)]
        pattern: String,
        #[arg(short, long = "size")]
        s: usize,
    },
    /// Print a generated graph as graph6.
    Generate {
        /// family:params[:seed], e.g. grid:3,4 or two_tree:8:1.
        spec: String,
    },
    /// Run a theorem case (T1..T16) or the regression suite ("all").
    Verify {
        id: String,
        /// Comma-separated integer parameters.
        #[arg(long, value_delimiter = ',')]
        params: Vec<u64>,
    },
    /// Evaluate a statistic over a graph6 stream.
    Scan {
        /// graph6 file, one record per line; "-" reads stdin.
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        pair: PatternPair,
        /// w_plus, w_minus or exists.
        #[arg(long, default_value = "w_plus")]
        statistic: String,
        #[arg(long, env = "WORMLAB_JOBS")]
        jobs: Option<usize>,
    },
    /// Probe a conjecture (cubic_P4 or cubic_C4) over a graph6 stream.
    Probe {
        conjecture: String,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, env = "WORMLAB_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// A graph6 record.
    #[arg(long)]
    g6: Option<String>,
    /// A file whose first graph6 record is used.
    #[arg(long)]
    file: Option<PathBuf>,
    /// A generated graph: family:params[:seed].
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Args)]
struct PatternPair {
    /// Pattern that may not be monochromatic, e.g. K2, P3, 3K1.
    #[arg(short = 'm', long = "mono")]
    m: String,
    /// Pattern that may not be rainbow, e.g. P4, C4, K1,3.
    #[arg(short = 'r', long = "rainbow")]
    r: String,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let mut out = Output::new(cli.pretty);
    match &cli.command {
        Command::Exists { graph, pair } => {
            let (g, m, r) = (load_graph(graph)?, pattern(&pair.m)?, pattern(&pair.r)?);
            let res = solve_goals(&g, &m, &r, &[Goal::Exists])?;
            out.emit(&ExistsReport {
                exists: res.exists,
                witness: res.witness,
            })?;
            Ok(res.exists)
        }
        Command::Solve {
            graph,
            pair,
            w_minus,
            w_plus,
            spectrum,
        } => {
            let (g, m, r) = (load_graph(graph)?, pattern(&pair.m)?, pattern(&pair.r)?);
            let mut goals = vec![Goal::Exists];
            if *w_minus {
                goals.push(Goal::WMinus);
            }
            if *w_plus {
                goals.push(Goal::WPlus);
            }
            if *spectrum {
                goals.push(Goal::Spectrum);
            }
            if goals.len() == 1 {
                goals.extend([Goal::WMinus, Goal::WPlus, Goal::Spectrum]);
            }
            let res = solve_goals(&g, &m, &r, &goals)?;
            out.emit(&res)?;
            Ok(res.exists)
        }
        Command::Bound { graph, pair } => {
            let (g, m, r) = (load_graph(graph)?, pattern(&pair.m)?, pattern(&pair.r)?);
            let chain = bound_chain(&g, &m, &r).map_err(usage)?;
            let counting = counting_bound(&g, &r).map_err(usage)?;
            let exists = chain.w_plus.is_some();
            out.emit(&BoundReport { chain, counting })?;
            Ok(exists)
        }
        Command::Copies {
            graph,
            pattern: p,
            list,
        } => {
            let (g, p) = (load_graph(graph)?, pattern(p)?);
            let fam = enumerate_copies(&g, &p).map_err(usage)?;
            out.emit(&CopiesReport {
                pattern: p.to_string(),
                count: fam.len(),
                copies: list.then(|| fam.iter().collect()),
            })?;
            Ok(true)
        }
        Command::Bicover {
            graph,
            pattern: p,
            s,
        } => {
            let (g, p) = (load_graph(graph)?, pattern(p)?);
            let fam = enumerate_copies(&g, &p).map_err(usage)?;
            out.emit(&BicoverReport {
                pattern: p.to_string(),
                copies: fam.len(),
                s: *s,
                bicovered: bicover_max(&fam, *s),
            })?;
            Ok(true)
        }
        Command::Generate { spec } => {
            let g = generated(spec)?;
            out.emit(&GenerateReport {
                family: spec.clone(),
                n: g.order(),
                edges: g.edge_count(),
                graph6: g.to_graph6(),
            })?;
            Ok(true)
        }
        Command::Verify { id, params } => {
            let cases: Vec<TheoremCase> = if id == "all" {
                regression_suite()
                    .into_iter()
                    .map(|(id, p)| run_theorem_case(id, &p))
                    .collect::<Result<_, _>>()
                    .map_err(usage)?
            } else {
                if !CASE_IDS.contains(&id.as_str()) {
                    return Err(usage(format!(
                        "unknown case {id:?}; expected T1..T16 or all"
                    )));
                }
                vec![run_theorem_case(id, params).map_err(usage)?]
            };
            let mut ok = true;
            for c in &cases {
                ok &= c.passed();
                out.emit(c)?;
            }
            Ok(ok)
        }
        Command::Scan {
            file,
            pair,
            statistic,
            jobs,
        } => {
            let (m, r) = (pattern(&pair.m)?, pattern(&pair.r)?);
            let stat: Statistic = statistic.parse().map_err(usage)?;
            let report = scan_stream(open(file)?, &m, &r, stat, *jobs).map_err(usage)?;
            for f in &report.failures {
                eprintln!("line {}: {}", f.line, f.message);
            }
            for rec in &report.records {
                out.emit(rec)?;
            }
            out.emit(&ScanFooter {
                aggregate: Aggregate {
                    records: report.records.len(),
                    failures: &report.failures,
                    orders: &report.orders,
                },
            })?;
            Ok(report.failures.is_empty())
        }
        Command::Probe {
            conjecture,
            file,
            jobs,
        } => {
            let conj: Conjecture = conjecture.parse().map_err(usage)?;
            let report = probe_conjecture(conj, open(file)?, *jobs).map_err(usage)?;
            for f in &report.skipped {
                eprintln!("line {}: {}", f.line, f.message);
            }
            out.emit(&report)?;
            Ok(report.counterexamples.is_empty())
        }
    }
}

fn pattern(text: &str) -> Result<Pattern, Failure> {
    parse_pattern(text).map_err(|e| usage(format!("pattern {text:?}: {e}")))
}

fn open(path: &PathBuf) -> Result<Box<dyn BufRead>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(f)))
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(text) = &input.g6 {
        return Graph::from_graph6(text).map_err(usage);
    }
    if let Some(path) = &input.file {
        let reader = open(path)?;
        for line in reader.lines() {
            let line = line.map_err(usage)?;
            if !line.trim().is_empty() {
                return Graph::from_graph6(&line).map_err(usage);
            }
        }
        return Err(usage(format!("{}: no graph6 record", path.display())));
    }
    let spec = input.gen.as_deref().expect("clap enforces one input");
    generated(spec)
}

/// Parses `family:params[:seed]`, with `corona:` wrapping another spec.
fn parse_family(spec: &str) -> Result<(Family, Option<u64>), Failure> {
    if let Some(rest) = spec.strip_prefix("corona:") {
        let (inner, seed) = parse_family(rest)?;
        return Ok((Family::Corona(Box::new(inner)), seed));
    }
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<usize> = match parts.next() {
        Some(p) if !p.is_empty() => p
            .split(',')
            .map(|x| {
                x.trim()
                    .parse()
                    .map_err(|_| usage(format!("bad parameter {x:?} in {spec:?}")))
            })
            .collect::<Result<_, _>>()?,
        _ => Vec::new(),
    };
    let seed = parts
        .next()
        .map(|s| {
            s.parse()
                .map_err(|_| usage(format!("bad seed {s:?} in {spec:?}")))
        })
        .transpose()?;
    if parts.next().is_some() {
        return Err(usage(format!(
            "expected family:params[:seed], got {spec:?}"
        )));
    }
    Ok((Family::from_name(name, &params).map_err(usage)?, seed))
}

fn generated(spec: &str) -> Result<Graph, Failure> {
    let (fam, seed) = parse_family(spec)?;
    generate(&fam, seed).map_err(usage)
}

fn solve_goals(
    g: &Graph,
    m: &Pattern,
    r: &Pattern,
    goals: &[Goal],
) -> Result<wormlab::SolveOutcome, Failure> {
    let inst = WormInstance::new(g, m, r).map_err(usage)?;
    solve(&inst, goals).map_err(usage)
}

#[derive(Serialize)]
struct ExistsReport {
    exists: bool,
    witness: Option<Coloring>,
}

#[derive(Serialize)]
struct BoundReport {
    chain: BoundChainReport,
    counting: Option<CountingBound>,
}

#[derive(Serialize)]
struct CopiesReport {
    pattern: String,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    copies: Option<Vec<VertexSet>>,
}

#[derive(Serialize)]
struct BicoverReport {
    pattern: String,
    copies: usize,
    s: usize,
    bicovered: usize,
}

#[derive(Serialize)]
struct GenerateReport {
    family: String,
    n: usize,
    edges: usize,
    graph6: String,
}

#[derive(Serialize)]
struct ScanFooter<'a> {
    aggregate: Aggregate<'a>,
}

#[derive(Serialize)]
struct Aggregate<'a> {
    records: usize,
    failures: &'a [wormlab::verify::ScanFailure],
    orders: &'a [wormlab::verify::OrderSummary],
}

struct Output {
    pretty: bool,
    stdout: io::StdoutLock<'static>,
}

impl Output {
    fn new(pretty: bool) -> Self {
        Output {
            pretty,
            stdout: io::stdout().lock(),
        }
    }

    fn emit<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let json = serde_json::to_value(value).map_err(usage)?;
        let text = if self.pretty {
            let mut s = String::new();
            render(&json, 0, &mut s);
            s
        } else {
            serde_json::to_string(value).map_err(usage)?
        };
        writeln!(self.stdout, "{text}").map_err(usage)
    }
}

/// Indented `key: value` rendering; scalar arrays stay on one line.
fn render(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, depth + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            out.push_str(&format!("{pad}  -\n"));
                            render(item, depth + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
    if depth == 0 && out.ends_with('\n') {
        out.pop();
    }
}

fn scalar(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => "-".to_string(),
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
