//! Command-line surface behind the `wfc` binary: graph file I/O and the
//! analyze, enumerate, family, verify and reduce commands.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{family, Family};
use crate::forest::{decide_well_f_covered, enumerate_maximal_forests, EnumerationBudget, ForestVerdict};
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};
use crate::harness::{
    emit_report, registry, verify, ReportFormat, RunInfo, ScaleOverrides, TheoremCheckResult, Verdict,
    DEFAULT_SEED,
};
use crate::independence::{enumerate_maximal_independent_sets, independence_verdict, IndependenceVerdict};
use crate::reductions::{decide_well_f_covered_reduced, reduce, ReductionTrace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Input(String),
}

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    pub name: String,
    pub n: usize,
    pub edges: Vec<Edge>,
}

impl GraphDocument {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges)
            .expect("validated while parsing")
            .named(self.name.clone())
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        message: format!("{what} `{token}` is not a non-negative integer"),
    })
}

/// Parses the canonical text format: `n <count>` once, then `e <u> <v>`
/// lines. Blank lines and `#` comments are ignored.
pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| ParseError { line, message };
        match tokens[0] {
            "n" => {
                if n.is_some() {
                    return Err(err("repeated vertex count".into()));
                }
                if tokens.len() != 2 {
                    return Err(err("expected `n <count>`".into()));
                }
                let count = parse_usize(tokens[1], line, "vertex count")?;
                if count > MAX_ORDER {
                    return Err(err(format!("vertex count {count} exceeds {MAX_ORDER}")));
                }
                n = Some(count);
            }
            "e" => {
                let Some(count) = n else {
                    return Err(err("edge before the `n <count>` header".into()));
                };
                if tokens.len() != 3 {
                    return Err(err("expected `e <u> <v>`".into()));
                }
                let u = parse_usize(tokens[1], line, "endpoint")?;
                let v = parse_usize(tokens[2], line, "endpoint")?;
                for w in [u, v] {
                    if w >= count {
                        return Err(err(format!("endpoint {w} out of range for n = {count}")));
                    }
                }
                let e = Edge::new(u, v).map_err(|e| err(e.to_string()))?;
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
            other => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or(ParseError {
        line: text.lines().count().max(1),
        message: "missing `n <count>` header".into(),
    })?;
    edges.sort();
    Ok(GraphDocument {
        name: String::new(),
        n,
        edges,
    })
}

/// Reads and parses a graph file; the graph is named after the file stem.
pub fn read_graph_file(path: &Path) -> Result<Graph, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let mut doc = parse_graph(&text).map_err(|source| CliError::Parse { path: shown, source })?;
    doc.name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(doc.graph())
}

#[derive(Debug, Parser)]
#[command(name = "wfc", version, about = "Maximal induced forests and well-f-covered graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    Forests,
    Mis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide well-f-coveredness and report independence data and the reduction trace.
    Analyze {
        path: PathBuf,
        /// Human-readable table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// List maximal induced forests or maximal independent sets.
    Enumerate {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "forests")]
        kind: SetKind,
        /// Stop after this many sets.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write a named family member in canonical text form.
    Family {
        /// path, cycle, complete, empty, complete_bipartite, wheel or star.
        name: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run registered claim checks and emit a report.
    Verify {
        /// Check ids, `all`, or `list` to print the registry.
        #[arg(required = true)]
        ids: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Largest exhaustive order (per factor for two-graph claims).
        #[arg(long)]
        nmax: Option<usize>,
        /// Random trials per check.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Value recorded as the run timestamp.
        #[arg(long)]
        timestamp: Option<String>,
    },
    /// Strip isolated vertices, pendant vertices and bridges, then decide on the core.
    Reduce {
        path: PathBuf,
        /// Also write the core graph here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Analyze { path, pretty } => cmd_analyze(&path, pretty, out),
        Command::Enumerate { path, kind, limit } => cmd_enumerate(&path, kind, limit, out),
        Command::Family { name, params, out: path } => cmd_family(&name, &params, path.as_deref(), out),
        Command::Verify {
            ids,
            seed,
            nmax,
            trials,
            out: path,
            format,
            timestamp,
        } => {
            let overrides = ScaleOverrides {
                exhaustive_n_max: nmax,
                random_trials: trials,
                seed: Some(seed),
            };
            let format = match format {
                FormatArg::Json => ReportFormat::Json,
                FormatArg::Csv => ReportFormat::Csv,
            };
            cmd_verify(&ids, &overrides, path.as_deref(), format, timestamp, out, err)
        }
        Command::Reduce { path, out: core_path } => cmd_reduce(&path, core_path.as_deref(), out),
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn stdout_error(source: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

#[derive(Serialize)]
struct Analysis<'a> {
    name: &'a str,
    graph: &'a Graph,
    forest: &'a ForestVerdict,
    independence: &'a IndependenceVerdict,
    reduction: &'a ReductionTrace,
}

fn set_text(s: &VertexSet) -> String {
    if s.is_empty() {
        "(empty)".into()
    } else {
        s.to_string()
    }
}

pub fn cmd_analyze(path: &Path, pretty: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph_file(path)?;
    let forest = decide_well_f_covered(&g);
    let independence = independence_verdict(&g);
    let reduction = reduce(&g);
    let name = g.name().unwrap_or("");
    if pretty {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut t = String::new();
        let _ = writeln!(t, "graph                {name} (n={}, m={})", g.order(), g.size());
        let _ = writeln!(t, "well-f-covered       {}", yes(forest.well_f_covered));
        let _ = writeln!(t, "forest number        {}", forest.forest_number);
        let _ = writeln!(t, "min maximal forest   {}", forest.min_maximal_order);
        let _ = writeln!(t, "largest witness      {}", set_text(&forest.witness_max));
        let _ = writeln!(t, "smallest witness     {}", set_text(&forest.witness_min));
        let _ = writeln!(t, "independence number  {}", independence.alpha);
        let _ = writeln!(t, "well-covered         {}", yes(independence.well_covered));
        let _ = writeln!(t, "singleton MIS        {}", yes(independence.has_singleton_mis));
        let _ = writeln!(
            t,
            "reduction            {} steps, core n={} m={}, offset {}",
            reduction.steps.len(),
            reduction.core.order(),
            reduction.core.size(),
            reduction.f_offset
        );
        out.write_all(t.as_bytes()).map_err(stdout_error)?;
    } else {
        let doc = Analysis {
            name,
            graph: &g,
            forest: &forest,
            independence: &independence,
            reduction: &reduction,
        };
        let json = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Input(e.to_string()))?;
        writeln!(out, "{json}").map_err(stdout_error)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_enumerate(
    path: &Path,
    kind: SetKind,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = read_graph_file(path)?;
    let (sets, truncated) = match kind {
        SetKind::Forests => {
            let mut budget = EnumerationBudget::default();
            if let Some(l) = limit {
                budget = budget.with_max_results(l);
            }
            let e = enumerate_maximal_forests(&g, &budget).map_err(|e| CliError::Input(e.to_string()))?;
            (e.sets, e.truncated)
        }
        SetKind::Mis => {
            let mut sets = enumerate_maximal_independent_sets(&g);
            let cut = limit.is_some_and(|l| sets.len() > l);
            if let Some(l) = limit {
                sets.truncate(l);
            }
            (sets, cut)
        }
    };
    let mut text = String::new();
    for s in &sets {
        let _ = writeln!(text, "{}", set_text(s));
    }
    if truncated {
        let _ = writeln!(text, "# truncated: more than {} sets", sets.len());
    }
    out.write_all(text.as_bytes()).map_err(stdout_error)?;
    Ok(EXIT_OK)
}

pub fn cmd_family(
    name: &str,
    params: &[String],
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let values = params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::Input(format!("parameter `{p}` is not a non-negative integer")))
        })
        .collect::<Result<Vec<usize>, _>>()?;
    let fam = Family::from_params(name, &values).map_err(|e| CliError::Input(e.to_string()))?;
    let built = family(fam).map_err(|e| CliError::Input(e.to_string()))?;
    let text = built.graph.to_text();
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(io_error(p))?;
            if let Some(f) = built.predicted_f {
                writeln!(out, "predicted_f {f}").map_err(stdout_error)?;
            }
        }
        None => {
            out.write_all(text.as_bytes()).map_err(stdout_error)?;
            if let Some(f) = built.predicted_f {
                writeln!(out, "# predicted_f {f}").map_err(stdout_error)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn summary_line(r: &TheoremCheckResult) -> String {
    let mut s = format!(
        "{:<12} {:<18} instances={} counterexamples={}\n",
        r.id,
        r.verdict.as_str(),
        r.instances_checked,
        r.counterexamples.len()
    );
    for (k, v) in &r.tallies {
        let _ = writeln!(s, "    {k}: {v}");
    }
    for n in &r.notes {
        let _ = writeln!(s, "    note: {n}");
    }
    if r.verdict == Verdict::Fail {
        for c in &r.counterexamples {
            let _ = writeln!(s, "    counterexample: expected {}, observed {}", c.expected, c.observed);
            for line in c.graph.lines() {
                let _ = writeln!(s, "      {line}");
            }
        }
    }
    s
}

/// [`EXIT_COUNTEREXAMPLE`] as soon as any result failed, else [`EXIT_OK`].
pub fn verify_exit_code(results: &[TheoremCheckResult]) -> i32 {
    if results.iter().all(|r| r.verdict.is_acceptable()) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

pub fn cmd_verify(
    ids: &[String],
    overrides: &ScaleOverrides,
    path: Option<&Path>,
    format: ReportFormat,
    timestamp: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if ids.iter().any(|i| i == "list") {
        for c in registry() {
            writeln!(out, "{:<12} {}\n{:<12} {}", c.id, c.generator, "", c.predicate).map_err(stdout_error)?;
        }
        return Ok(EXIT_OK);
    }
    let selected: Vec<String> = if ids.iter().any(|i| i == "all") {
        registry().iter().map(|c| c.id.to_string()).collect()
    } else {
        ids.to_vec()
    };
    for id in &selected {
        crate::harness::lookup(id).map_err(|e| CliError::Input(e.to_string()))?;
    }
    let mut results = Vec::new();
    for id in &selected {
        let r = verify(id, overrides).map_err(|e| CliError::Input(e.to_string()))?;
        err.write_all(summary_line(&r).as_bytes())
            .map_err(stdout_error)?;
        results.push(r);
    }
    let mut run = RunInfo::new(overrides.seed.unwrap_or(DEFAULT_SEED));
    run.timestamp = timestamp;
    let doc = emit_report(&run, &results, format).map_err(|e| CliError::Input(e.to_string()))?;
    match path {
        Some(p) => std::fs::write(p, doc).map_err(io_error(p))?,
        None => out.write_all(doc.as_bytes()).map_err(stdout_error)?,
    }
    Ok(verify_exit_code(&results))
}

#[derive(Serialize)]
struct Reduced<'a> {
    trace: &'a ReductionTrace,
    verdict: &'a ForestVerdict,
}

pub fn cmd_reduce(path: &Path, core_path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = read_graph_file(path)?;
    let trace = reduce(&g);
    let verdict = decide_well_f_covered_reduced(&g);
    if let Some(p) = core_path {
        std::fs::write(p, trace.core.to_text()).map_err(io_error(p))?;
    }
    let json = serde_json::to_string_pretty(&Reduced {
        trace: &trace,
        verdict: &verdict,
    })
    .map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{json}").map_err(stdout_error)?;
    Ok(EXIT_OK)
}
