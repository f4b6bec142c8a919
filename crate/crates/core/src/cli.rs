//! Command-line front end. [`run`] does everything the binary does, against
//! caller-supplied streams, and returns the exit status.
//!
//! Exit statuses: 0 success, 1 verification failure (the report is still
//! printed), 2 usage or parse error, 3 search budget exhausted. With several
//! input graphs the largest status wins.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::automorphism::automorphism_group;
use crate::coloring::{ArcColoring, Color, EdgeColoring, Palette};
use crate::construct::{
    almost_majority_4, color_auto, color_complete, color_k2n_graph, color_symmetric_digraph,
    color_traceable_mindeg4, color_via_asymmetric_subgraph, majority3_bipartite,
    majority3_symmetric_digraph, two_coloring_balanced, ConstructError, TwoColoringSpec,
};
use crate::exact::{exact_arc_index, exact_index, probe_conjecture, ArcIndexKind, ExactError, DEFAULT_BUDGET};
use crate::graph::{
    find_hamiltonian_path, generate, parse_graphs, serialize_graph, symmetric_closure, Digraph,
    FamilyKind, FamilySpec, Format, Graph, SearchError,
};
use crate::verify::{
    verify_arc_distinguishing, verify_arc_majority, verify_arc_majority_distinguishing,
    verify_distinguishing, verify_majority, verify_majority_distinguishing, verify_proper,
    verify_proper_distinguishing, MajorityMode, VerificationReport, Verdict,
};

pub const SCHEMA: &str = "majicolor/1";
/// Overrides the default node budget of every search.
pub const BUDGET_ENV: &str = "MAJICOLOR_BUDGET";

/// Fixed DOT palette, cycled by color index.
const DOT_COLORS: [&str; 10] = [
    "red", "blue", "green3", "orange", "purple", "brown", "magenta", "cyan3", "gold", "gray40",
];

#[derive(Parser)]
#[command(name = "majicolor", version, about = "Majority distinguishing edge colorings")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Construct a coloring and certify it
    Color(ColorArgs),
    /// Check a coloring against a predicate
    Verify(VerifyArgs),
    /// Compute an index exactly by exhaustive search
    Exact(ExactArgs),
    /// Print a graph from a named family
    Gen(GenArgs),
    /// Translate between graph formats
    Convert(ConvertArgs),
    /// Report the automorphism group and, optionally, test the five-color conjecture
    Probe(ProbeArgs),
}

#[derive(Args)]
struct Input {
    /// Graph file (`-` or absent: stdin). JSON documents printed by `color` are accepted too
    input: Option<PathBuf>,
    /// graph6, edges or dimacs; guessed when absent
    #[arg(long)]
    format: Option<Format>,
    /// Generate the input from a family instead of reading it
    #[arg(long)]
    family: Option<FamilyKind>,
    /// Family parameters, comma separated
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    /// Single family parameter
    #[arg(long)]
    n: Option<usize>,
    /// Worker threads over several input graphs
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Auto,
    Two,
    Am4,
    Asym,
    Complete,
    Traceable,
    K2n,
    Main,
    Digraph,
    Bip3,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Spanning path for `traceable`, comma separated; searched for when absent
    #[arg(long, value_delimiter = ',')]
    path: Vec<usize>,
    /// With `bip3`: color the arcs of the symmetric closure
    #[arg(long)]
    arcs: bool,
    #[arg(long)]
    budget: Option<u64>,
    /// Also write the colored graph as DOT
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write JSON here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Strict,
    Weak,
    Almost,
    D,
    Md,
    Proper,
    ChiD,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = VerifyMode::Md)]
    mode: VerifyMode,
    /// One color per edge in edge-id order; taken from the JSON document when absent
    #[arg(long, value_delimiter = ',')]
    colors: Vec<Color>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExactKind {
    M,
    D,
    Md,
    ChiD,
    ArcM,
    ArcMd,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = ExactKind::Md)]
    kind: ExactKind,
    #[arg(long, default_value_t = 8)]
    kmax: usize,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilyKind,
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "graph6")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Graph6,
    Edges,
    Dimacs,
    Dot,
    Json,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum)]
    to: Target,
}

#[derive(Args)]
struct ProbeArgs {
    #[command(flatten)]
    input: Input,
    /// Test the five-color conjecture on each graph
    #[arg(long)]
    conjecture: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<u64>,
}

/// One JSON document and the status it contributes.
struct Outcome {
    code: i32,
    doc: Value,
    dot: Option<String>,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Self { code: 0, doc, dot: None }
    }

    fn fail(code: i32, verb: &str, msg: impl std::fmt::Display) -> Self {
        Self {
            code,
            doc: json!({"schema": SCHEMA, "verb": verb, "error": msg.to_string()}),
            dot: None,
        }
    }
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the verb.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.verb, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "majicolor: {msg}");
            2
        }
    }
}

fn dispatch(verb: Verb, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Usage> {
    match verb {
        Verb::Gen(a) => {
            let g = generate(&family_spec(a.family, &a.params, a.n))?;
            write!(stdout, "{}", with_newline(serialize_graph(&g, a.format)))?;
            Ok(0)
        }
        Verb::Convert(a) => {
            let inputs = load(&a.input, stdin)?;
            for (g, _) in &inputs {
                let text = match a.to {
                    Target::Graph6 => serialize_graph(g, Format::Graph6),
                    Target::Edges => serialize_graph(g, Format::EdgeList),
                    Target::Dimacs => serialize_graph(g, Format::Dimacs),
                    Target::Dot => dot_graph(g, None),
                    Target::Json => json!({"schema": SCHEMA, "graph": graph_json(g)}).to_string(),
                };
                write!(stdout, "{}", with_newline(text))?;
            }
            Ok(0)
        }
        Verb::Color(a) => {
            let budget = budget(a.budget)?;
            let inputs = load(&a.input, stdin)?;
            let outs = batch(&inputs, a.input.jobs, |g, _| color_one(g, &a, budget));
            let mut json_out: Box<dyn Write> = match &a.out {
                Some(p) => Box::new(std::fs::File::create(p)?),
                None => Box::new(&mut *stdout),
            };
            let code = emit(&outs, &mut *json_out, stderr)?;
            if let Some(p) = &a.dot {
                let dots: String = outs.iter().filter_map(|o| o.dot.clone()).collect();
                std::fs::write(p, dots)?;
            }
            Ok(code)
        }
        Verb::Verify(a) => {
            let inputs = load(&a.input, stdin)?;
            let outs = batch(&inputs, a.input.jobs, |g, doc| verify_one(g, doc, &a));
            emit(&outs, stdout, stderr)
        }
        Verb::Exact(a) => {
            let budget = budget(a.budget)?;
            let inputs = load(&a.input, stdin)?;
            let outs = batch(&inputs, a.input.jobs, |g, _| exact_one(g, &a, budget));
            emit(&outs, stdout, stderr)
        }
        Verb::Probe(a) => {
            let budget = budget(a.budget)?;
            let inputs = load(&a.input, stdin)?;
            let outs = batch(&inputs, a.input.jobs, |g, _| probe_one(g, &a, budget));
            emit(&outs, stdout, stderr)
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn family_spec(kind: FamilyKind, params: &[usize], n: Option<usize>) -> FamilySpec {
    let mut p = params.to_vec();
    if let Some(n) = n {
        p.insert(0, n);
    }
    FamilySpec::new(kind, p)
}

fn budget(explicit: Option<u64>) -> Result<u64, Usage> {
    if let Some(b) = explicit {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Usage(format!("{BUDGET_ENV} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// Input graphs, each with the JSON document it came from, if any.
fn load(input: &Input, stdin: &mut dyn Read) -> Result<Vec<(Graph, Option<Value>)>, Usage> {
    if let Some(kind) = input.family {
        return Ok(vec![(generate(&family_spec(kind, &input.params, input.n))?, None)]);
    }
    let bytes = match &input.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read(p).map_err(|e| Usage(format!("{}: {e}", p.display())))?,
        _ => {
            let mut b = Vec::new();
            stdin.read_to_end(&mut b)?;
            b
        }
    };
    if bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') {
        let text = String::from_utf8(bytes)?;
        return serde_json::Deserializer::from_str(&text)
            .into_iter::<Value>()
            .map(|doc| {
                let doc = doc?;
                Ok((graph_from_json(&doc["graph"])?, Some(doc)))
            })
            .collect();
    }
    let format = input.format.unwrap_or_else(|| Format::detect(&bytes));
    let graphs = parse_graphs(&bytes, format)?;
    if graphs.is_empty() {
        return Err(Usage("no input graph".into()));
    }
    Ok(graphs.into_iter().map(|g| (g, None)).collect())
}

fn graph_from_json(v: &Value) -> Result<Graph, Usage> {
    let n = v["n"].as_u64().ok_or_else(|| Usage("JSON document lacks graph.n".into()))? as usize;
    let edges: Vec<(usize, usize)> = serde_json::from_value(v["edges"].clone())?;
    Ok(Graph::new(n, edges)?)
}

fn graph_json(g: &Graph) -> Value {
    json!({"n": g.n(), "edges": g.edges()})
}

/// Runs `f` over the inputs on up to `jobs` threads, keeping input order.
fn batch<F>(inputs: &[(Graph, Option<Value>)], jobs: usize, f: F) -> Vec<Outcome>
where
    F: Fn(&Graph, Option<&Value>) -> Outcome + Sync,
{
    let jobs = jobs.clamp(1, inputs.len().max(1));
    if jobs == 1 {
        return inputs.iter().map(|(g, d)| f(g, d.as_ref())).collect();
    }
    let mut slots: Vec<Option<Outcome>> = (0..inputs.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                let f = &f;
                scope.spawn(move || {
                    (t..inputs.len())
                        .step_by(jobs)
                        .map(|i| (i, f(&inputs[i].0, inputs[i].1.as_ref())))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, o) in h.join().expect("worker panicked") {
                slots[i] = Some(o);
            }
        }
    });
    slots.into_iter().map(|o| o.expect("every input processed")).collect()
}

fn emit(outs: &[Outcome], out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Usage> {
    let mut code = 0;
    for o in outs {
        writeln!(out, "{}", o.doc)?;
        if let Some(e) = o.doc.get("error") {
            writeln!(err, "majicolor: {}", e.as_str().unwrap_or_default())?;
        }
        code = code.max(o.code);
    }
    Ok(code)
}

fn construct_status(e: &ConstructError) -> i32 {
    match e {
        ConstructError::VerifierRejected(_) => 1,
        ConstructError::Search(SearchError::BudgetExhausted | SearchError::NotFoundWithinBudget)
        | ConstructError::Exact(ExactError::BudgetExhausted { .. })
        | ConstructError::NoAsymmetricSubgraphFound
        | ConstructError::EnumerationExhausted { .. } => 3,
        _ => 2,
    }
}

enum Colored {
    Edges(EdgeColoring),
    Arcs(Digraph, ArcColoring),
}

fn color_one(g: &Graph, a: &ColorArgs, budget: u64) -> Outcome {
    let mut extra = serde_json::Map::new();
    let result: Result<Colored, ConstructError> = (|| {
        Ok(match a.algo {
            Algo::Auto if is_complete(g) && g.n() >= 3 => Colored::Edges(complete_on(g)?),
            Algo::Auto => match color_k2n_graph(g) {
                Ok(c) => Colored::Edges(c),
                Err(_) => Colored::Edges(color_auto(g, a.seed)?),
            },
            Algo::Main => Colored::Edges(color_auto(g, a.seed)?),
            Algo::Two => {
                let t = two_coloring_balanced(g, &TwoColoringSpec::default())?;
                extra.insert("special_vertex".into(), json!(t.special_vertex));
                Colored::Edges(t.coloring)
            }
            Algo::Am4 => Colored::Edges(almost_majority_4(g)?),
            Algo::Asym => Colored::Edges(color_via_asymmetric_subgraph(g, a.seed)?),
            Algo::Complete => {
                if !is_complete(g) {
                    return Err(ConstructError::Precondition("graph is not complete".into()));
                }
                Colored::Edges(complete_on(g)?)
            }
            Algo::Traceable => {
                let path = if a.path.is_empty() {
                    find_hamiltonian_path(g, budget)?.ok_or(ConstructError::PathNotSpanning)?
                } else {
                    a.path.clone()
                };
                extra.insert("path".into(), json!(path));
                Colored::Edges(color_traceable_mindeg4(g, &path, a.seed)?)
            }
            Algo::K2n => Colored::Edges(color_k2n_graph(g)?),
            Algo::Digraph => {
                let d = symmetric_closure(g);
                let c = color_symmetric_digraph(&d, a.seed)?;
                Colored::Arcs(d, c)
            }
            Algo::Bip3 if a.arcs => {
                let d = symmetric_closure(g);
                let c = majority3_symmetric_digraph(&d)?;
                Colored::Arcs(d, c)
            }
            Algo::Bip3 => Colored::Edges(majority3_bipartite(g)?),
        })
    })();
    let colored = match result {
        Ok(c) => c,
        Err(e) => return Outcome::fail(construct_status(&e), "color", e),
    };
    let (kind, triples, palette, used, report, dot) = match &colored {
        Colored::Edges(c) => {
            let report = match a.algo {
                Algo::Two => two_report(g, c, extra["special_vertex"].as_u64().map(|v| v as usize)),
                Algo::Am4 => verify_majority(g, c, MajorityMode::Almost),
                Algo::Bip3 => verify_majority(g, c, MajorityMode::Strict),
                _ => verify_majority_distinguishing(g, c),
            };
            let triples: Vec<(usize, usize, Color)> =
                g.edges().iter().zip(&c.colors).map(|(&(u, v), &k)| (u, v, k)).collect();
            ("edge", triples, &c.palette, c.colors_used(), report, dot_graph(g, Some(&c.colors)))
        }
        Colored::Arcs(d, c) => {
            let report = if a.algo == Algo::Bip3 {
                verify_arc_majority(d, c)
            } else {
                verify_arc_majority_distinguishing(d, c)
            };
            let triples = d.arcs().iter().zip(&c.colors).map(|(&(u, v), &k)| (u, v, k)).collect();
            ("arc", triples, &c.palette, c.colors_used(), report, dot_digraph(d, &c.colors))
        }
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return Outcome::fail(2, "color", e),
    };
    let mut doc = json!({
        "schema": SCHEMA,
        "verb": "color",
        "algo": algo_name(a.algo),
        "seed": a.seed,
        "graph": graph_json(g),
        "kind": kind,
        "coloring": triples,
        "palette": palette.labels(),
        "colors_used": used,
        "verification_report": report,
    });
    doc.as_object_mut().expect("object").extend(extra);
    Outcome {
        code: if report.passed() { 0 } else { 1 },
        doc,
        dot: Some(dot),
    }
}

fn algo_name(a: Algo) -> String {
    a.to_possible_value().expect("not skipped").get_name().to_string()
}

fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * g.n().saturating_sub(1) / 2
}

/// The complete-graph coloring moved onto `g`'s edge ids.
fn complete_on(g: &Graph) -> Result<EdgeColoring, ConstructError> {
    let (k, c) = color_complete(g.n())?;
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| c.colors[k.edge_id(u, v).expect("same vertex set")])
        .collect();
    Ok(EdgeColoring::new(colors, c.palette))
}

/// Weak majority, except that the special vertex may carry `d/2 + 1`.
fn two_report(g: &Graph, c: &EdgeColoring, special: Option<usize>) -> Result<VerificationReport, crate::coloring::ColoringError> {
    let mut r = verify_majority(g, c, MajorityMode::Weak)?;
    r.violations
        .retain(|v| Some(v.vertex) != special || v.count > g.degree(v.vertex) / 2 + 1);
    r.mode = "weak_with_special".into();
    r.verdict = if r.violations.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(r)
}

fn verify_one(g: &Graph, doc: Option<&Value>, a: &VerifyArgs) -> Outcome {
    let result = (|| -> Result<VerificationReport, Usage> {
        let arcs = doc.is_some_and(|d| d["kind"] == "arc");
        let palette_of = |k: usize| -> Result<Palette, Usage> {
            match doc.map(|d| &d["palette"]) {
                Some(p @ Value::Array(_)) => Ok(Palette::from_labels(serde_json::from_value(p.clone())?)),
                _ => Ok(Palette::numbered(k)),
            }
        };
        if arcs {
            let d = symmetric_closure(g);
            let mut colors = vec![None; d.arc_count()];
            let triples: Vec<(usize, usize, Color)> = serde_json::from_value(doc.expect("doc")["coloring"].clone())?;
            for (u, v, c) in triples {
                let id = d.arc_id(u, v).ok_or_else(|| Usage(format!("{u}->{v} is not an arc")))?;
                colors[id] = Some(c);
            }
            let colors: Vec<Color> = colors
                .into_iter()
                .collect::<Option<_>>()
                .ok_or_else(|| Usage("coloring misses an arc".into()))?;
            let k = colors.iter().max().map_or(1, |&c| c as usize + 1);
            let c = ArcColoring::new(colors, palette_of(k)?);
            return Ok(match a.mode {
                VerifyMode::Strict => verify_arc_majority(&d, &c)?,
                VerifyMode::D => verify_arc_distinguishing(&d, &c)?,
                VerifyMode::Md => verify_arc_majority_distinguishing(&d, &c)?,
                _ => return Err(Usage("arc colorings support modes strict, d and md".into())),
            });
        }
        let colors: Vec<Color> = if !a.colors.is_empty() {
            a.colors.clone()
        } else if let Some(d) = doc {
            let triples: Vec<(usize, usize, Color)> = serde_json::from_value(d["coloring"].clone())?;
            let mut colors = vec![None; g.m()];
            for (u, v, c) in triples {
                let id = g.edge_id(u, v).ok_or_else(|| Usage(format!("{u}-{v} is not an edge")))?;
                colors[id] = Some(c);
            }
            colors
                .into_iter()
                .collect::<Option<_>>()
                .ok_or_else(|| Usage("coloring misses an edge".into()))?
        } else {
            return Err(Usage("no coloring: pass --colors or a JSON document".into()));
        };
        let k = colors.iter().max().map_or(1, |&c| c as usize + 1);
        let palette = if a.colors.is_empty() { palette_of(k)? } else { Palette::numbered(k) };
        let c = EdgeColoring::new(colors, palette);
        Ok(match a.mode {
            VerifyMode::Strict => verify_majority(g, &c, MajorityMode::Strict)?,
            VerifyMode::Weak => verify_majority(g, &c, MajorityMode::Weak)?,
            VerifyMode::Almost => verify_majority(g, &c, MajorityMode::Almost)?,
            VerifyMode::D => verify_distinguishing(g, &c)?,
            VerifyMode::Md => verify_majority_distinguishing(g, &c)?,
            VerifyMode::Proper => verify_proper(g, &c)?,
            VerifyMode::ChiD => verify_proper_distinguishing(g, &c)?,
        })
    })();
    match result {
        Ok(r) => Outcome {
            code: if r.passed() { 0 } else { 1 },
            doc: json!({"schema": SCHEMA, "verb": "verify", "graph": graph_json(g), "verification_report": r}),
            dot: None,
        },
        Err(Usage(msg)) => Outcome::fail(2, "verify", msg),
    }
}

fn exact_one(g: &Graph, a: &ExactArgs, budget: u64) -> Outcome {
    use crate::verify::IndexKind;
    let kind_name = a.kind.to_possible_value().expect("not skipped").get_name().to_string();
    let result = match a.kind {
        ExactKind::ArcM | ExactKind::ArcMd => {
            let d = symmetric_closure(g);
            let kind = if matches!(a.kind, ExactKind::ArcM) {
                ArcIndexKind::ArcMajority
            } else {
                ArcIndexKind::ArcMajorityDistinguishing
            };
            exact_arc_index(&d, kind, a.kmax, budget).map(|r| {
                let w: Vec<(usize, usize, Color)> =
                    d.arcs().iter().zip(&r.witness.colors).map(|(&(u, v), &c)| (u, v, c)).collect();
                (r.k, w, r.nodes)
            })
        }
        _ => {
            let kind = match a.kind {
                ExactKind::M => IndexKind::Majority,
                ExactKind::D => IndexKind::Distinguishing,
                ExactKind::Md => IndexKind::MajorityDistinguishing,
                _ => IndexKind::ProperDistinguishing,
            };
            exact_index(g, kind, a.kmax, budget).map(|r| {
                let w: Vec<(usize, usize, Color)> =
                    g.edges().iter().zip(&r.witness.colors).map(|(&(u, v), &c)| (u, v, c)).collect();
                (r.k, w, r.nodes)
            })
        }
    };
    let base = json!({"schema": SCHEMA, "verb": "exact", "kind": kind_name, "graph": graph_json(g)});
    let mut doc = base;
    let fields = doc.as_object_mut().expect("object");
    let code = match result {
        Ok((k, witness, nodes)) => {
            fields.insert("k".into(), json!(k));
            fields.insert("witness".into(), json!(witness));
            fields.insert("nodes".into(), json!(nodes));
            0
        }
        Err(ExactError::BudgetExhausted { k }) => {
            fields.insert("status".into(), json!("budget_exhausted"));
            fields.insert("k_reached".into(), json!(k));
            3
        }
        Err(ExactError::InfeasibleUpToKMax { k_max }) => {
            fields.insert("status".into(), json!("infeasible"));
            fields.insert("k_max".into(), json!(k_max));
            0
        }
        Err(e) => return Outcome::fail(2, "exact", e),
    };
    Outcome { code, doc, dot: None }
}

fn probe_one(g: &Graph, a: &ProbeArgs, budget: u64) -> Outcome {
    let group = automorphism_group(g);
    let generators: Vec<&[usize]> = group.generators().iter().map(|p| p.images()).collect();
    let mut doc = json!({
        "schema": SCHEMA,
        "verb": "probe",
        "graph": graph_json(g),
        "n": g.n(),
        "m": g.m(),
        "connected": g.is_connected(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "group": {
            "order": group.order_string(),
            "generators": generators,
            "orbits": group.orbits(),
        },
    });
    if a.conjecture {
        match probe_conjecture(g, budget, a.seed) {
            Ok(r) => {
                doc["conjecture"] = json!(r);
            }
            Err(e) => return Outcome::fail(2, "probe", e),
        }
    }
    Outcome::ok(doc)
}

fn dot_attrs(c: Color) -> String {
    format!("[color=\"{}\", label=\"{c}\"]", DOT_COLORS[c as usize % DOT_COLORS.len()])
}

/// DOT text of `g`, with edge colors when given (one per edge id).
pub fn dot_graph(g: &Graph, colors: Option<&[Color]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match colors {
            Some(cs) => s.push_str(&format!("  {u} -- {v} {};\n", dot_attrs(cs[id]))),
            None => s.push_str(&format!("  {u} -- {v};\n")),
        }
    }
    s.push_str("}\n");
    s
}

/// DOT text of a digraph with one color per arc id.
pub fn dot_digraph(d: &Digraph, colors: &[Color]) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..d.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (&(u, v), &c) in d.arcs().iter().zip(colors) {
        s.push_str(&format!("  {u} -> {v} {};\n", dot_attrs(c)));
    }
    s.push_str("}\n");
    s
}
