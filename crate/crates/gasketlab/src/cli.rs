//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a conjecture
//! counterexample was found, 3 a check contradicting a proved result failed.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gasket_core::analysis::{run_suite, SUITES};
use gasket_core::build::verify_counts;
use gasket_core::coloring::{self, verify_proper, Coloring, LabelColoring};
use gasket_core::graph6::encode_graph6;
use gasket_core::label::{format_label, parse_label};
use gasket_core::{build_gasket, build_sierpinski, BaseGraph, MaterializedGraph, OracleContext};

use crate::cache::CachedOracle;
use crate::config::{Config, Layer, OutputFormat};
use crate::export::GraphDump;
use crate::input::{self, EdgeListFile};
use crate::sweep::{self, SweepOptions, Tally};

pub const EXIT_FINDING: u8 = 2;
pub const EXIT_BUG: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "gasketlab", version, about = "Generalized Sierpinski graphs and gaskets")]
pub struct Cli {
    /// TOML config file (also GASKETLAB_CONFIG)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest graph that may be materialized (also GASKETLAB_VERTEX_CAP)
    #[arg(long, global = true)]
    vertex_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Materialize S(G,t) or S[G,t]
    Build {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Kind::Gasket)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = BuildOut::Counts)]
        out: BuildOut,
    },
    /// Neighbors of gasket vertices, computed from labels
    Neighbors {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        t: usize,
        /// Vertex label such as "1.{2,3}@2"; may be repeated
        #[arg(long, required = true)]
        vertex: Vec<String>,
        /// LRU entries for repeated queries (also GASKETLAB_ORACLE_CACHE)
        #[arg(long)]
        cache: Option<usize>,
    },
    /// Color S[G,t] and verify the result
    Color {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = ColorOut::Json)]
        out: ColorOut,
    },
    /// Check the structural results on S[G,t]
    Check {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Exact chi/omega of gaskets over a graph6 corpus
    Sweep {
        #[arg(long)]
        corpus: PathBuf,
        /// Depths, comma separated
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        t: Vec<usize>,
        /// Worker threads (also GASKETLAB_JOBS)
        #[arg(long)]
        jobs: Option<usize>,
        /// Per-instance budget in seconds (also GASKETLAB_TIME_BUDGET_S)
        #[arg(long)]
        time_budget: Option<u64>,
        /// csv or jsonl (also GASKETLAB_OUTPUT_FORMAT)
        #[arg(long, value_enum)]
        out: Option<OutputFormat>,
    },
    /// Convert a base graph, or re-render a JSON graph dump
    Export {
        #[command(flatten)]
        base: OptionalBase,
        /// JSON dump written by `build --out json`
        #[arg(long, conflicts_with_all = ["base", "edges"])]
        import: Option<PathBuf>,
        #[arg(long, value_enum)]
        to: ExportFormat,
    },
}

#[derive(Debug, Args)]
struct BaseArgs {
    /// JSON edge-list file, graph6 file, or inline graph6 record
    #[arg(long, required_unless_present = "edges")]
    base: Option<String>,
    /// Inline edges such as 1-2,2-3
    #[arg(long, conflicts_with = "base")]
    edges: Option<String>,
    /// Order for --edges when it has isolated high vertices
    #[arg(long, requires = "edges")]
    n: Option<usize>,
}

#[derive(Debug, Args)]
struct OptionalBase {
    #[arg(long)]
    base: Option<String>,
    #[arg(long, conflicts_with = "base")]
    edges: Option<String>,
    #[arg(long, requires = "edges")]
    n: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Sierpinski,
    Gasket,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuildOut {
    Dot,
    Json,
    Counts,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Level2,
    Recursive,
    Bipartite,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorOut {
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Graph6,
    Json,
    Dot,
}

fn load(base: &Option<String>, edges: &Option<String>, n: Option<usize>) -> anyhow::Result<BaseGraph> {
    Ok(match (base, edges) {
        (Some(b), _) => input::load_base(b)?,
        (None, Some(e)) => input::parse_shorthand(e, n)?,
        (None, None) => bail!("a base graph is required (--base or --edges)"),
    })
}

impl BaseArgs {
    fn load(&self) -> anyhow::Result<BaseGraph> {
        load(&self.base, &self.edges, self.n)
    }
}

/// Parses `args` and runs the command, writing results to `out`.
pub fn run<I, T>(args: I, env: &dyn Fn(&str) -> Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli, env, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn resolve_config(cli: &Cli, flags: Layer, env: &dyn Fn(&str) -> Option<String>) -> anyhow::Result<Config> {
    let path = cli.config.clone().or_else(|| env("GASKETLAB_CONFIG").map(PathBuf::from));
    let file = match path {
        Some(p) => Layer::from_file(&p)?,
        None => Layer::default(),
    };
    let flags = Layer {
        vertex_cap: cli.vertex_cap,
        ..flags
    };
    Ok(Config::resolve(flags, Layer::from_env(env)?, file)?)
}

fn execute(cli: Cli, env: &dyn Fn(&str) -> Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<u8> {
    let flags = match &cli.command {
        Command::Neighbors { cache, .. } => Layer {
            oracle_cache: *cache,
            ..Layer::default()
        },
        Command::Sweep {
            jobs,
            time_budget,
            out,
            ..
        } => Layer {
            jobs: *jobs,
            time_budget_s: *time_budget,
            output_format: *out,
            ..Layer::default()
        },
        _ => Layer::default(),
    };
    let config = resolve_config(&cli, flags, env)?;
    let cap = config.vertex_cap;
    match cli.command {
        Command::Build { base, t, kind, out: format } => {
            let g = base.load()?;
            let m = match kind {
                Kind::Sierpinski => build_sierpinski(&g, t, cap)?,
                Kind::Gasket => build_gasket(&g, t, cap)?,
            };
            match format {
                BuildOut::Counts => {
                    writeln!(out, "vertices={} edges={} components={}", m.order(), m.size(), m.components())?;
                    let report = verify_counts(&m);
                    if !report.passed() {
                        writeln!(err, "closed-form mismatch: {}", report.summary())?;
                        return Ok(EXIT_BUG);
                    }
                }
                BuildOut::Dot => write!(out, "{}", GraphDump::of(&m).to_dot())?,
                BuildOut::Json => writeln!(out, "{}", GraphDump::of(&m).to_json())?,
            }
            Ok(0)
        }
        Command::Neighbors { base, t, vertex, .. } => {
            let g = base.load()?;
            let oracle = CachedOracle::new(OracleContext::new(g.clone(), t)?, config.oracle_cache);
            for (k, text) in vertex.iter().enumerate() {
                let v = parse_label(text, &g, t).with_context(|| format!("vertex {text:?}"))?;
                if vertex.len() > 1 {
                    if k > 0 {
                        writeln!(out)?;
                    }
                    writeln!(out, "{}:", format_label(&v))?;
                }
                for u in oracle.neighbors(&v)? {
                    writeln!(out, "{}", format_label(&u))?;
                }
            }
            Ok(0)
        }
        Command::Color { base, t, method, .. } => {
            let g = base.load()?;
            let m = build_gasket(&g, t, cap)?;
            let c = color(&g, &m, method)?;
            let report = verify_proper(&m, &c)?;
            writeln!(out, "{}", color_json(&m, &c))?;
            writeln!(err, "proper={} colors_used={} palette={}", report.proper, report.colors_used, c.palette())?;
            if !report.proper {
                for (u, v) in &report.violations {
                    writeln!(err, "monochromatic edge {u} -- {v}")?;
                }
                return Ok(EXIT_BUG);
            }
            Ok(0)
        }
        Command::Check { base, t, suite } => {
            let g = base.load()?;
            if suite != "all" && !SUITES.contains(&suite.as_str()) {
                bail!("unknown suite {suite:?}; expected all or one of {}", SUITES.join(", "));
            }
            let outcomes = run_suite(&g, t, cap, &suite)?;
            for o in &outcomes {
                let tag = if !o.passed { "FAIL" } else if o.finding { "FINDING" } else { "PASS" };
                writeln!(out, "{tag} {}: {}", o.name, o.detail)?;
            }
            Ok(if outcomes.iter().any(|o| !o.passed) {
                EXIT_BUG
            } else if outcomes.iter().any(|o| o.finding) {
                EXIT_FINDING
            } else {
                0
            })
        }
        Command::Sweep { corpus, t, .. } => {
            let text = std::fs::read_to_string(&corpus).with_context(|| format!("cannot read corpus {}", corpus.display()))?;
            let (graphs, bad) = input::read_corpus(&text);
            for b in &bad {
                writeln!(err, "{}:{}: skipped malformed graph6: {}", corpus.display(), b.line, b.message)?;
            }
            if t.is_empty() || t.contains(&0) {
                bail!("--t needs depths of at least 1");
            }
            let graphs: Vec<(String, BaseGraph)> = graphs.into_iter().map(|(_, s, g)| (s, g)).collect();
            let opts = SweepOptions {
                depths: t,
                vertex_cap: cap,
                time_budget: Duration::from_secs(config.time_budget_s),
                jobs: config.jobs,
            };
            let records = sweep::sweep(&graphs, &opts);
            match config.output_format {
                OutputFormat::Csv => sweep::write_csv(&records, &mut *out)?,
                OutputFormat::Jsonl => sweep::write_jsonl(&records, &mut *out)?,
            }
            let tally = Tally::of(&records);
            writeln!(
                err,
                "{} instances: {} ok, {} counterexamples, {} bugs, {} skipped, {} malformed lines",
                records.len(),
                tally.ok,
                tally.findings,
                tally.bugs,
                tally.skipped,
                bad.len()
            )?;
            Ok(if tally.bugs > 0 {
                EXIT_BUG
            } else if tally.findings > 0 {
                EXIT_FINDING
            } else {
                0
            })
        }
        Command::Export { base, import, to } => {
            if let Some(path) = import {
                let text = std::fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
                let dump = GraphDump::from_json(&text)?;
                match to {
                    ExportFormat::Dot => write!(out, "{}", dump.to_dot())?,
                    ExportFormat::Json => writeln!(out, "{}", dump.to_json())?,
                    ExportFormat::Graph6 => bail!("graph6 holds base graphs only; export the base instead"),
                }
                return Ok(0);
            }
            let g = load(&base.base, &base.edges, base.n)?;
            match to {
                ExportFormat::Graph6 => writeln!(out, "{}", encode_graph6(&g))?,
                ExportFormat::Json => writeln!(out, "{}", serde_json::to_string(&EdgeListFile::from_graph(&g))?)?,
                ExportFormat::Dot => {
                    writeln!(out, "graph G {{")?;
                    for v in 0..g.order() {
                        writeln!(out, "  \"{}\";", v + 1)?;
                    }
                    for (u, v) in g.edges() {
                        writeln!(out, "  \"{}\" -- \"{}\";", u + 1, v + 1)?;
                    }
                    writeln!(out, "}}")?;
                }
            }
            Ok(0)
        }
    }
}

fn color(g: &BaseGraph, m: &MaterializedGraph, method: Method) -> anyhow::Result<Coloring> {
    let t = m.depth();
    let scheme = match method {
        Method::Exact => return Ok(coloring::exact_coloring(m)),
        Method::Level2 => {
            if t != 2 {
                bail!("level2 colors S[G,2] only; use --t 2 or --method recursive");
            }
            let k = g.chromatic_number();
            let f = Coloring::new(k as u32, g.find_coloring(k).expect("chi colors the base"))?;
            coloring::color_level2(g, &f)?
        }
        Method::Recursive => coloring::color_recursive(g, t)?,
        Method::Bipartite => coloring::color_bipartite(g, t)?,
    };
    let c = scheme.materialize(m);
    debug_assert_eq!(c.palette(), scheme.palette());
    Ok(c)
}

/// `{"k": palette, "colors": {"<label>": color, ...}}` in label order.
pub fn color_json(m: &MaterializedGraph, c: &Coloring) -> String {
    let mut colors = serde_json::Map::new();
    for (v, label) in m.labels().enumerate() {
        colors.insert(format_label(&label), c.color(v).into());
    }
    serde_json::json!({ "k": c.palette(), "colors": colors }).to_string()
}

pub fn main() -> ExitCode {
    let env = |k: &str| std::env::var(k).ok();
    let code = run(std::env::args_os(), &env, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
