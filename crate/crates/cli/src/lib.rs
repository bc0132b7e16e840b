//! `catg`: command-line driver for the toolkit.
//!
//! Results go to standard output or `--out`; diagnostics go to standard
//! error. Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use catg_core::structure::recognize_table3;
use catg_core::{tables, GeneratorFile, PermGroup, Permutation};
use catg_graph::census::{DEFAULT_GRAPH_CAP, DEFAULT_ORDER_CAP};
use catg_graph::{
    aut_g_s, automorphism_group, census_pentavalent, is_normal_cayley, quotient_graph, transitivity_degree,
    CayleyGraphSpec, CosetGraphSpec, Graph, GraphError, QuotientSummary, DEFAULT_VERTEX_CAP,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Cap on group enumeration for small-group operations.
const ENUM_CAP: u64 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Group(#[from] catg_core::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    /// A verification ran to completion and failed; the report has been written.
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CheckFailed(_) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "catg", version, about = "Arc-transitive Cayley graph toolkit")]
pub struct Cli {
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify the pentavalent 3-arc-transitive Cayley graph on A79.
    VerifyA79 {
        /// Write the JSON report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Generator file to check instead of the bundled one.
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Include per-check wall times in the JSON report.
        #[arg(long)]
        timings: bool,
    },
    /// Order, orbits or point stabilizer of a group given by a generator file.
    Group {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        order: bool,
        #[arg(long)]
        orbits: bool,
        /// Point (1-based) whose stabilizer to report.
        #[arg(long)]
        stabilizer: Option<usize>,
    },
    /// Analyze Cos(X, H, g) and optionally build it.
    CosetGraph {
        #[arg(long)]
        file: PathBuf,
        /// Names of the generators of H.
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<String>,
        /// Name of g.
        #[arg(long)]
        g: String,
        /// Names of the generators of X [default: H's generators and g].
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Build Cay(G, S) and test normality.
    Cayley {
        #[arg(long)]
        file: PathBuf,
        /// Names of the generators of G [default: every name in the file].
        #[arg(long, value_delimiter = ',')]
        group: Vec<String>,
        /// Connection set by name; `name^-1` denotes an inverse.
        #[arg(long, value_delimiter = ',', required = true)]
        connection: Vec<String>,
        /// Skip the Aut(G, S) computation.
        #[arg(long)]
        no_aut_gs: bool,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Automorphism group of a graph given as an edge list.
    Aut {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
    /// Census of pentavalent arc-transitive coset graphs with soluble stabilizers.
    Census {
        /// A named group: A<n> or S<n>.
        #[arg(long, conflicts_with = "file")]
        named: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_cap: u64,
        #[arg(long, default_value_t = DEFAULT_GRAPH_CAP)]
        graph_cap: u64,
        /// Write one edge list per entry into this directory.
        #[arg(long)]
        graph_dir: Option<PathBuf>,
    },
    /// Normal quotient of a graph by N ⊴ X.
    Quotient {
        #[arg(long)]
        graph: PathBuf,
        /// Generator file acting on the vertices (vertex v is point v+1).
        #[arg(long)]
        file: PathBuf,
        /// Names of the generators of N.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<String>,
        /// Names of the generators of X [default: the full automorphism group].
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
        /// Write the quotient graph here (`.dot` for DOT, else edge list).
        #[arg(long)]
        write_graph: Option<PathBuf>,
    },
    /// Print the reference tables, or self-check them.
    Tables {
        /// Table number 1 to 4 [default: all].
        #[arg(long)]
        number: Option<u32>,
        #[arg(long)]
        check: bool,
    },
}

#[derive(Debug, Args)]
struct GroupSource {
    #[arg(long)]
    file: PathBuf,
    /// Generator names to use [default: all].
    #[arg(long, value_delimiter = ',')]
    gens: Vec<String>,
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Build the graph and write it here (`.dot` for DOT, else edge list).
    #[arg(long)]
    write_graph: Option<PathBuf>,
    /// Refuse to build graphs with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP as u64)]
    vertex_cap: u64,
}

/// Parses `argv` (program name first), runs, and returns the exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads();
    match run(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("catg: {e}");
            e.exit_code()
        }
    }
}

/// Bounds the global rayon pool by `CATG_THREADS` when set.
fn configure_threads() {
    if let Some(n) = std::env::var("CATG_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // already initialized is fine: keep whatever pool exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input { path: path.display().to_string(), message: e.to_string() })
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input { path: path.display().to_string(), message: e.to_string() }
}

fn read_generators(path: &Path) -> Result<GeneratorFile> {
    GeneratorFile::parse(&read(path)?).map_err(|e| input_error(path, e))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&read(path)?).map_err(|e| input_error(path, e))
}

/// Resolves names (with optional `^-1` suffix) against a generator file.
fn lookup(file: &GeneratorFile, path: &Path, names: &[String]) -> Result<Vec<Permutation>> {
    names
        .iter()
        .map(|raw| {
            let raw = raw.trim();
            let (name, invert) = match raw.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (raw, false),
            };
            let p = file.get(name).ok_or_else(|| input_error(path, format!("no generator named {name:?}")))?;
            Ok(if invert { p.inverse() } else { p.clone() })
        })
        .collect()
}

fn group_from(file: &GeneratorFile, path: &Path, names: &[String]) -> Result<PermGroup> {
    let gens = if names.is_empty() {
        file.entries.iter().map(|(_, p)| p.clone()).collect()
    } else {
        lookup(file, path, names)?
    };
    if gens.is_empty() {
        return Ok(PermGroup::trivial(file.degree));
    }
    Ok(PermGroup::from_generators(gens)?)
}

fn named_group(name: &str) -> Result<PermGroup> {
    let bad = || CliError::Usage(format!("unknown group {name:?}; expected A<n> or S<n>"));
    let (kind, n) = name.split_at(1);
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match kind {
        "A" | "a" => Ok(PermGroup::alternating(n)),
        "S" | "s" => Ok(PermGroup::symmetric(n)),
        _ => Err(bad()),
    }
}

fn render_graph(graph: &Graph, path: &Path) -> String {
    if path.extension().is_some_and(|e| e == "dot") {
        graph.to_dot()
    } else {
        graph.to_edge_list()
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| input_error(path, e))
}

struct Output<'a> {
    cli: &'a Cli,
}

impl Output<'_> {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.cli.out {
            Some(path) => write_file(path, text),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                Ok(stdout.flush()?)
            }
        }
    }

    /// JSON when `--json` is set, `text` otherwise.
    fn result<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.cli.json {
            self.emit(&(serde_json::to_string_pretty(value).expect("serializable") + "\n"))
        } else {
            self.emit(&text())
        }
    }
}

#[derive(Serialize)]
struct GroupReport {
    degree: usize,
    order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stabilizer: Option<StabilizerReport>,
}

#[derive(Serialize)]
struct StabilizerReport {
    point: usize,
    order: String,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct CosetGraphReport {
    index: String,
    valency: u64,
    suborbit_length: usize,
    connected: bool,
    stabilizer_tag: String,
    s_value: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<BuiltGraph>,
}

#[derive(Serialize)]
struct BuiltGraph {
    vertices: usize,
    edges: usize,
    path: String,
}

#[derive(Serialize)]
struct CayleyReport {
    group_order: String,
    connection_set: Vec<String>,
    vertices: usize,
    valency: Option<usize>,
    connected: bool,
    aut_order: String,
    normal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    aut_g_s_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph_path: Option<String>,
}

#[derive(Serialize)]
struct AutReport {
    vertices: usize,
    edges: usize,
    order: String,
    vertex_transitive: bool,
    vertex_stabilizer_order: String,
    /// Largest s with Aut transitive on s-arcs; absent when undefined.
    s: Option<usize>,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct CensusReport {
    group_degree: usize,
    group_order: String,
    stabilizer_classes: usize,
    skipped_over_cap: usize,
    entries: Vec<catg_graph::CensusEntry>,
}

#[derive(Serialize)]
struct QuotientReport {
    #[serde(flatten)]
    summary: QuotientSummary,
    vertices: usize,
    quotient_edges: usize,
    orbit_map: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph_path: Option<String>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "n/a".into())
}

pub fn run(cli: &Cli) -> Result<()> {
    let out = Output { cli };
    match &cli.command {
        Command::VerifyA79 { report, generators, timings } => {
            let result = match generators {
                Some(path) => {
                    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
                    catg_certify::verify_generator_text(&read(path)?, &name)
                }
                None => catg_certify::verify_construction_a79(),
            };
            let json = result.to_json(*timings) + "\n";
            if let Some(path) = report {
                write_file(path, &json)?;
            }
            if cli.json {
                out.emit(&json)?;
            } else {
                out.emit(&result.summary())?;
            }
            if result.overall {
                Ok(())
            } else {
                let failed: Vec<&str> = result
                    .checks
                    .iter()
                    .filter(|c| c.status == catg_certify::Status::Fail)
                    .map(|c| c.id.as_str())
                    .collect();
                Err(CliError::CheckFailed(format!("certificate failed: {}", failed.join(", "))))
            }
        }
        Command::Group { source, order, orbits, stabilizer } => {
            let file = read_generators(&source.file)?;
            let group = group_from(&file, &source.file, &source.gens)?;
            let stab = match *stabilizer {
                Some(p) => {
                    let s = group.point_stabilizer(p)?;
                    Some(StabilizerReport {
                        point: p,
                        order: s.order().to_string(),
                        generators: s.generators().iter().map(Permutation::to_string).collect(),
                    })
                }
                None => None,
            };
            let report = GroupReport {
                degree: group.degree(),
                order: group.order().to_string(),
                orbits: orbits.then(|| group.orbits()),
                stabilizer: stab,
            };
            let everything = !order && !orbits && stabilizer.is_none();
            out.result(&report, || {
                let mut text = String::new();
                if *order && !orbits && stabilizer.is_none() {
                    return format!("{}\n", report.order);
                }
                if *order || everything {
                    text.push_str(&format!("order {}\n", report.order));
                }
                if let Some(orbits) = &report.orbits {
                    for o in orbits {
                        let pts: Vec<String> = o.iter().map(usize::to_string).collect();
                        text.push_str(&format!("orbit {}\n", pts.join(" ")));
                    }
                }
                if let Some(s) = &report.stabilizer {
                    text.push_str(&format!("stabilizer of {} has order {}\n", s.point, s.order));
                    for g in &s.generators {
                        text.push_str(&format!("  {g}\n"));
                    }
                }
                text
            })
        }
        Command::CosetGraph { file: path, h, g, x, build } => {
            let file = read_generators(path)?;
            let h_group = group_from(&file, path, h)?;
            let g_perm = lookup(&file, path, std::slice::from_ref(g))?.remove(0);
            let x_names: Vec<String> =
                if x.is_empty() { h.iter().cloned().chain(std::iter::once(g.clone())).collect() } else { x.clone() };
            let x_group = group_from(&file, path, &x_names)?;
            let tag = recognize_table3(&h_group)?;
            let spec = CosetGraphSpec::new(x_group, h_group, g_perm)?;
            let graph = match &build.write_graph {
                Some(gpath) => {
                    let cg = spec.materialize(build.vertex_cap)?;
                    write_file(gpath, &render_graph(&cg.graph, gpath))?;
                    Some(BuiltGraph {
                        vertices: cg.graph.vertex_count(),
                        edges: cg.graph.edge_count(),
                        path: gpath.display().to_string(),
                    })
                }
                None => None,
            };
            let report = CosetGraphReport {
                index: spec.index().to_string(),
                valency: spec.valency(ENUM_CAP)?,
                suborbit_length: spec.suborbit_length(),
                connected: spec.is_connected()?,
                stabilizer_tag: tag.name().to_string(),
                s_value: tag.s_value(),
                graph,
            };
            out.result(&report, || {
                let mut text = format!(
                    "vertices {}\nvalency {}\nconnected {}\nstabilizer {} (s = {})\n",
                    report.index,
                    report.valency,
                    yes_no(report.connected),
                    report.stabilizer_tag,
                    opt(report.s_value)
                );
                if let Some(g) = &report.graph {
                    text.push_str(&format!("wrote {} vertices, {} edges to {}\n", g.vertices, g.edges, g.path));
                }
                text
            })
        }
        Command::Cayley { file: path, group, connection, no_aut_gs, build } => {
            let file = read_generators(path)?;
            let g = group_from(&file, path, group)?;
            let s = lookup(&file, path, connection)?;
            let spec = CayleyGraphSpec::new(g, s)?;
            let cg = spec.materialize(build.vertex_cap)?;
            let aut = automorphism_group(&cg.graph, build.vertex_cap as usize)?;
            let normal = is_normal_cayley(&spec, build.vertex_cap)?;
            let aut_gs = if *no_aut_gs { None } else { Some(aut_g_s(&spec, build.vertex_cap)?.order().to_string()) };
            let graph_path = match &build.write_graph {
                Some(gpath) => {
                    write_file(gpath, &render_graph(&cg.graph, gpath))?;
                    Some(gpath.display().to_string())
                }
                None => None,
            };
            let report = CayleyReport {
                group_order: spec.group().order().to_string(),
                connection_set: spec.connection_set().iter().map(Permutation::to_string).collect(),
                vertices: cg.graph.vertex_count(),
                valency: cg.graph.regular_degree(),
                connected: cg.graph.is_connected(),
                aut_order: aut.order().to_string(),
                normal,
                aut_g_s_order: aut_gs,
                graph_path,
            };
            out.result(&report, || {
                format!(
                    "vertices {}\nvalency {}\nconnected {}\naut order {}\nnormal {}\naut(G,S) order {}\n",
                    report.vertices,
                    opt(report.valency),
                    yes_no(report.connected),
                    report.aut_order,
                    yes_no(report.normal),
                    opt(report.aut_g_s_order.clone())
                )
            })
        }
        Command::Aut { graph: path, vertex_cap } => {
            let graph = read_graph(path)?;
            let aut = automorphism_group(&graph, *vertex_cap)?;
            let stab = aut.point_stabilizer(1)?;
            let s = if aut.is_transitive() && graph.regular_degree().is_some_and(|k| k >= 3) {
                match transitivity_degree(&graph, &aut) {
                    Ok(s) => Some(s),
                    Err(GraphError::NotArcTransitive) => Some(0),
                    Err(e) => return Err(e.into()),
                }
            } else {
                None
            };
            let report = AutReport {
                vertices: graph.vertex_count(),
                edges: graph.edge_count(),
                order: aut.order().to_string(),
                vertex_transitive: aut.is_transitive(),
                vertex_stabilizer_order: stab.order().to_string(),
                s,
                generators: aut.generators().iter().map(Permutation::to_string).collect(),
            };
            out.result(&report, || {
                format!(
                    "order {}\nvertex-transitive {}\nvertex stabilizer order {}\ns-arc-transitive s = {}\n",
                    report.order,
                    yes_no(report.vertex_transitive),
                    report.vertex_stabilizer_order,
                    opt(report.s)
                )
            })
        }
        Command::Census { named, file, gens, order_cap, graph_cap, graph_dir } => {
            let x = match (named, file) {
                (Some(name), _) => named_group(name)?,
                (None, Some(path)) => group_from(&read_generators(path)?, path, gens)?,
                (None, None) => return Err(CliError::Usage("census needs --named or --file".into())),
            };
            let census = census_pentavalent(&x, *order_cap, *graph_cap)?;
            let mut entries = census.entries.clone();
            if let Some(dir) = graph_dir {
                fs::create_dir_all(dir).map_err(|e| input_error(dir, e))?;
                for (i, (entry, graph)) in entries.iter_mut().zip(&census.graphs).enumerate() {
                    let path = dir.join(format!("census_{:03}_{}v.edges", i, graph.vertex_count()));
                    write_file(&path, &graph.to_edge_list())?;
                    entry.edge_list_path = Some(path.display().to_string());
                }
            }
            let report = CensusReport {
                group_degree: x.degree(),
                group_order: x.order().to_string(),
                stabilizer_classes: census.stabilizer_classes,
                skipped_over_cap: census.skipped_over_cap,
                entries,
            };
            out.result(&report, || {
                let mut text = format!(
                    "group order {}; {} stabilizer classes; {} graphs; {} over the cap\n",
                    report.group_order,
                    report.stabilizer_classes,
                    report.entries.len(),
                    report.skipped_over_cap
                );
                for e in &report.entries {
                    text.push_str(&format!(
                        "{} vertices, stabilizer {}, s = {} (observed {}), |Aut| = {}{}\n",
                        e.vertex_count,
                        e.stabilizer_tag.name(),
                        opt(e.s_value),
                        e.x_transitivity,
                        e.aut_order,
                        e.edge_list_path.as_ref().map(|p| format!(", {p}")).unwrap_or_default()
                    ));
                }
                text
            })
        }
        Command::Quotient { graph: gpath, file: path, n, x, write_graph } => {
            let graph = read_graph(gpath)?;
            let file = read_generators(path)?;
            if file.degree != graph.vertex_count() {
                return Err(input_error(
                    path,
                    format!("degree {} but the graph has {} vertices", file.degree, graph.vertex_count()),
                ));
            }
            let n_group = group_from(&file, path, n)?;
            let x_group =
                if x.is_empty() { automorphism_group(&graph, DEFAULT_VERTEX_CAP)? } else { group_from(&file, path, x)? };
            let q = quotient_graph(&graph, &x_group, &n_group)?;
            let graph_path = match write_graph {
                Some(p) => {
                    write_file(p, &render_graph(&q.quotient, p))?;
                    Some(p.display().to_string())
                }
                None => None,
            };
            let report = QuotientReport {
                summary: q.summary(),
                vertices: q.orbit_count,
                quotient_edges: q.quotient.edge_count(),
                orbit_map: q.orbit_map.clone(),
                graph_path,
            };
            out.result(&report, || {
                format!(
                    "orbits {}\nsemiregular {}\nquotient valency {}\nvalency preserved {}\n",
                    report.summary.orbit_count,
                    yes_no(report.summary.semiregular),
                    opt(report.summary.quotient_valency),
                    report.summary.valency_preserved.map(yes_no).unwrap_or("n/a")
                )
            })
        }
        Command::Tables { number, check } => {
            if *check {
                let report = tables::self_check_tables();
                let failures: Vec<String> = report.failures().iter().map(|s| s.to_string()).collect();
                #[derive(Serialize)]
                struct CheckOut {
                    passed: bool,
                    failures: Vec<String>,
                }
                out.result(&CheckOut { passed: report.passed(), failures: failures.clone() }, || {
                    if failures.is_empty() {
                        "tables consistent\n".into()
                    } else {
                        failures.iter().map(|f| format!("FAIL {f}\n")).collect()
                    }
                })?;
                return if report.passed() {
                    Ok(())
                } else {
                    Err(CliError::CheckFailed(format!("{} table checks failed", failures.len())))
                };
            }
            let numbers: Vec<u32> = match number {
                Some(n) => vec![*n],
                None => vec![1, 2, 3, 4],
            };
            let mut json = serde_json::Map::new();
            let mut text = String::new();
            for n in numbers {
                json.insert(format!("table{n}"), tables::table_json(n).map_err(|e| CliError::Usage(e.to_string()))?);
                text.push_str(&format!("Table {n}\n{}\n", tables::render_table(n)?));
            }
            out.result(&json, || text)
        }
    }
}

