//! Command-line front end. [`run`] takes arguments and I/O handles and
//! returns the process exit code, so the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 fuzz violations, 2 usage/parse/config errors,
//! 3 bounds undefined (edgeless graph; the document is still printed).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::bounds::{bound_report, ceil_with_slack, BoundError, GraphSpectra, ReportOptions};
use crate::bounds::{hoffman_from_spectrum, nikiforov_from_spectrum};
use crate::coloring::{
    chromatic_number_exact, independence_number_exact, ChromaticOutcome, IndependenceOutcome,
    DEFAULT_BUDGET,
};
use crate::graph::{self, emit_graph6, Graph, GraphError, InputFormat, ParseError};
use crate::harness::{self, ConfigError, ExploreReport, FuzzConfig, FuzzSummary, TrialRecord};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Parser, Serialize)]
#[command(name = "chromaspec", version, about = "Spectral lower bounds on the chromatic number")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Fuzz tolerance (defaults to 1e-8, or 1e-9 for the signless campaign).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Node limit for the exact solvers.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Record wall-clock seconds in the output (breaks byte-identical reruns).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Spectral bounds, chromatic number and optional extras for one graph.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        /// Compute the chromatic number (the default).
        #[arg(long, overrides_with = "no_chi")]
        chi: bool,
        /// Skip the chromatic number.
        #[arg(long)]
        no_chi: bool,
        /// Compute the independence number.
        #[arg(long)]
        alpha: bool,
        /// Check the equality characterization on the coloring found.
        #[arg(long)]
        equality: bool,
    },
    /// Bounds for a named graph family over a parameter range.
    Table {
        family: TableFamily,
        /// Inclusive parameter range `a..b`, or a single value.
        #[arg(value_parser = parse_range)]
        range: Option<(usize, usize)>,
        /// Part size for complete-multipartite (the range counts parts).
        #[arg(long, default_value_t = 2)]
        part_size: usize,
    },
    /// Randomized and exhaustive checks of an inequality.
    Fuzz {
        target: FuzzTarget,
        #[command(flatten)]
        config: FuzzFlags,
    },
    /// Search for instances where the block inequality is (nearly) tight.
    Explore {
        #[command(flatten)]
        config: FuzzFlags,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Exact chromatic number with an optimal coloring.
    Chi {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Exact independence number with a maximum independent set.
    Alpha {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Re-encode a graph as graph6.
    Encode {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GraphInput {
    /// Input file, or `-` for standard input.
    #[arg(required_unless_present = "graph6", conflicts_with = "graph6")]
    pub path: Option<String>,
    /// Inline graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Input format (auto-detected by default).
    #[arg(long, value_enum)]
    pub format_in: Option<InputFormat>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FuzzFlags {
    #[arg(long)]
    pub trials: Option<u64>,
    /// Vertex count range `a..b` or a single value.
    #[arg(long = "n", value_parser = parse_range)]
    pub n_range: Option<(usize, usize)>,
    /// Part count range `a..b` or a single value.
    #[arg(long = "r", value_parser = parse_range)]
    pub r_range: Option<(usize, usize)>,
    /// Off-diagonal entry scale.
    #[arg(long)]
    pub scale: Option<f64>,
    /// Diagonal entry scale.
    #[arg(long)]
    pub diag_scale: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzTarget {
    Theorem1,
    Lemma1,
    BoundsVsChi,
    Signless,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFamily {
    Complete,
    CompleteMinusEdge,
    Cycle,
    Wheel,
    CompleteMultipartite,
    Petersen,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a nonnegative integer"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timing: Option<f64>,
}

/// A plain table used for the CSV and Markdown projections.
#[derive(Debug, Clone, Default)]
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone)]
enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl Cell {
    fn render(&self, digits: usize) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v, digits),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

/// Markdown keeps small magnitudes readable with an exponent; CSV prints the
/// rounded value in plain decimal.
fn format_float(v: f64, digits: usize) -> String {
    let r = round_sig(v, digits);
    if digits < 10 && r != 0.0 && r.abs() < 1e-3 {
        format!("{:.*e}", digits - 1, r)
    } else {
        r.to_string()
    }
}

/// Rounds to `digits` significant digits; non-finite values pass through.
pub fn round_sig(v: f64, digits: usize) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return v;
    }
    format!("{:.*e}", digits - 1, v).parse().unwrap_or(v)
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"), 10);
            *v = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Command outcome before rendering.
struct Output {
    results: Value,
    table: Table,
    /// Key/value summary lines shown above the Markdown table.
    summary: Vec<(&'static str, String)>,
    exit_code: i32,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize to JSON")
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let start = Instant::now();
    let output = match execute(&cli, stdin) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let elapsed = start.elapsed().as_secs_f64();

    let mut inputs = to_value(&cli);
    if let Value::Object(map) = &mut inputs {
        map.remove("format");
        map.remove("timing");
    }
    let mut doc = OutputDocument {
        schema_version: SCHEMA_VERSION,
        command: command_name(&cli.command).to_string(),
        inputs,
        results: output.results,
        timing: cli.timing.then_some(elapsed),
    };
    round_floats(&mut doc.results);
    round_floats(&mut doc.inputs);
    let rendered = match cli.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(&output.table),
        OutputFormat::Md => render_md(&doc.command, &output.summary, &output.table, cli.timing.then_some(elapsed)),
    };
    if stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return 2;
    }
    output.exit_code
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Bounds { .. } => "bounds",
        Command::Table { .. } => "table",
        Command::Fuzz { .. } => "fuzz",
        Command::Explore { .. } => "explore",
        Command::Chi { .. } => "chi",
        Command::Alpha { .. } => "alpha",
        Command::Encode { .. } => "encode",
    }
}

fn render_csv(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.headers).expect("in-memory write");
    for row in &table.rows {
        w.write_record(row.iter().map(|c| c.render(10))).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 cells")
}

fn render_md(command: &str, summary: &[(&str, String)], table: &Table, timing: Option<f64>) -> String {
    let mut out = format!("## {command}\n\n");
    for (k, v) in summary {
        out.push_str(&format!("- {k}: {v}\n"));
    }
    if let Some(t) = timing {
        out.push_str(&format!("- seconds: {}\n", round_sig(t, 4)));
    }
    if !summary.is_empty() || timing.is_some() {
        out.push('\n');
    }
    if table.rows.is_empty() && !summary.is_empty() {
        return out;
    }
    out.push_str(&format!("| {} |\n", table.headers.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(table.headers.len())));
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|c| c.render(4).replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn read_graph(input: &GraphInput, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    if let Some(g6) = &input.graph6 {
        return Ok(graph::parse_graph6(g6)?);
    }
    let path = input.path.as_deref().ok_or_else(|| CliError::Usage("no input graph".into()))?;
    let mut text = String::new();
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(io)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io)?;
    }
    Ok(graph::parse(&text, input.format_in)?)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    match &cli.command {
        Command::Bounds {
            input,
            no_chi,
            alpha,
            equality,
            ..
        } => {
            let g = read_graph(input, stdin)?;
            let options = ReportOptions {
                compute_chi: !no_chi,
                compute_alpha: *alpha,
                compute_equality: *equality,
                chi_budget: cli.budget,
                alpha_budget: cli.budget,
                ..ReportOptions::default()
            };
            cmd_bounds(&g, &options)
        }
        Command::Table {
            family,
            range,
            part_size,
        } => cmd_table(*family, *range, *part_size, cli.budget),
        Command::Fuzz { target, config } => {
            let cfg = fuzz_config(*target, config, cli)?;
            let summary = match target {
                FuzzTarget::Theorem1 => harness::fuzz_theorem1(&cfg)?,
                FuzzTarget::Lemma1 => harness::fuzz_lemma1(&cfg)?,
                FuzzTarget::BoundsVsChi => harness::fuzz_bounds_vs_chi(&cfg)?,
                FuzzTarget::Signless => harness::fuzz_signless(&cfg)?,
            };
            Ok(fuzz_output(&summary))
        }
        Command::Explore { config, top } => {
            let cfg = apply_flags(FuzzConfig::explore(), config, cli);
            Ok(explore_output(&harness::explore_equality(&cfg, *top)?))
        }
        Command::Chi { input } => {
            let g = read_graph(input, stdin)?;
            Ok(chi_output(&g, &chromatic_number_exact(&g, cli.budget)))
        }
        Command::Alpha { input } => {
            let g = read_graph(input, stdin)?;
            Ok(alpha_output(&g, &independence_number_exact(&g, cli.budget)))
        }
        Command::Encode { input } => {
            let g = read_graph(input, stdin)?;
            let g6 = emit_graph6(&g)?;
            let mut table = Table {
                headers: vec!["graph6", "n", "m"],
                ..Table::default()
            };
            table.rows.push(vec![g6.clone().into(), g.n().into(), g.edge_count().into()]);
            Ok(Output {
                results: serde_json::json!({ "graph6": g6, "n": g.n(), "m": g.edge_count() }),
                table,
                summary: Vec::new(),
                exit_code: 0,
            })
        }
    }
}

fn cmd_bounds(g: &Graph, options: &ReportOptions) -> Result<Output, CliError> {
    let report = bound_report(g, options)?;
    let mut table = Table {
        headers: vec![
            "n",
            "m",
            "mu_a",
            "mu_min_a",
            "mu_l",
            "hoffman",
            "hoffman_ceil",
            "nikiforov",
            "nikiforov_ceil",
            "chi",
            "alpha",
            "ratio_bound",
            "equality_holds",
        ],
        ..Table::default()
    };
    table.rows.push(vec![
        report.n.into(),
        report.m.into(),
        report.mu_a.into(),
        report.mu_min_a.into(),
        report.mu_l.into(),
        report.hoffman.into(),
        report.hoffman_ceil.into(),
        report.nikiforov.into(),
        report.nikiforov_ceil.into(),
        report.chi.as_ref().map(chi_text).into(),
        report.alpha.as_ref().map(alpha_text).into(),
        report.ratio_bound.into(),
        report.equality.as_ref().map(|e| e.characterization_holds).into(),
    ]);
    let exit_code = if report.bounds_defined() { 0 } else { 3 };
    Ok(Output {
        results: to_value(&report),
        table,
        summary: Vec::new(),
        exit_code,
    })
}

fn chi_text(o: &ChromaticOutcome) -> String {
    match o {
        ChromaticOutcome::Exact { chi, .. } => chi.to_string(),
        ChromaticOutcome::Unknown { lower, upper, .. } => format!("{lower}..{upper}"),
    }
}

fn alpha_text(o: &IndependenceOutcome) -> String {
    match o {
        IndependenceOutcome::Exact { alpha, .. } => alpha.to_string(),
        IndependenceOutcome::Unknown { lower, upper, .. } => format!("{lower}..{upper}"),
    }
}

/// One row of `table`: `n` is the family parameter, `vertices` the order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub vertices: usize,
    pub hoffman: f64,
    pub hoffman_ceil: i64,
    pub nikiforov: f64,
    pub nikiforov_ceil: i64,
    pub chi: Option<usize>,
    pub chi_status: &'static str,
}

fn family_graph(family: TableFamily, param: usize, part_size: usize) -> Result<Graph, GraphError> {
    match family {
        TableFamily::Complete => graph::complete(param),
        TableFamily::CompleteMinusEdge => graph::complete_minus_edge(param),
        TableFamily::Cycle => graph::cycle(param),
        TableFamily::Wheel => graph::wheel(param),
        TableFamily::CompleteMultipartite => graph::complete_multipartite(&vec![part_size; param]),
        TableFamily::Petersen => Ok(graph::petersen()),
    }
}

fn cmd_table(
    family: TableFamily,
    range: Option<(usize, usize)>,
    part_size: usize,
    budget: u64,
) -> Result<Output, CliError> {
    let (lo, hi) = match (family, range) {
        (TableFamily::Petersen, _) => (10, 10),
        (_, Some(r)) => r,
        (_, None) => return Err(CliError::Usage("table needs a range such as 4..12".into())),
    };
    let mut rows = Vec::new();
    for param in lo..=hi {
        let g = family_graph(family, param, part_size)?;
        if g.is_edgeless() {
            return Err(CliError::Usage(format!("parameter {param} gives a graph without edges")));
        }
        let spectra = GraphSpectra::of(&g).map_err(BoundError::from)?;
        let hoffman = hoffman_from_spectrum(spectra.mu_a(), spectra.mu_min_a());
        let nikiforov = nikiforov_from_spectrum(spectra.mu_a(), spectra.mu_l())?;
        let chi = chromatic_number_exact(&g, budget).exact();
        rows.push(TableRow {
            n: param,
            vertices: g.n(),
            hoffman,
            hoffman_ceil: ceil_with_slack(hoffman),
            nikiforov,
            nikiforov_ceil: ceil_with_slack(nikiforov),
            chi,
            chi_status: if chi.is_some() { "exact" } else { "unknown" },
        });
    }
    let table = Table {
        headers: vec![
            "n",
            "vertices",
            "hoffman",
            "hoffman_ceil",
            "nikiforov",
            "nikiforov_ceil",
            "chi",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.n.into(),
                    r.vertices.into(),
                    r.hoffman.into(),
                    r.hoffman_ceil.into(),
                    r.nikiforov.into(),
                    r.nikiforov_ceil.into(),
                    r.chi.map_or(Cell::from("unknown"), Cell::from),
                ]
            })
            .collect(),
    };
    Ok(Output {
        results: serde_json::json!({ "family": family, "rows": rows }),
        table,
        summary: Vec::new(),
        exit_code: 0,
    })
}

fn apply_flags(mut cfg: FuzzConfig, flags: &FuzzFlags, cli: &Cli) -> FuzzConfig {
    cfg.seed = cli.seed;
    if let Some(t) = flags.trials {
        cfg.trials = t;
    }
    if let Some(n) = flags.n_range {
        cfg.n_range = n;
        // keep the default part range usable for small n
        if flags.r_range.is_none() {
            cfg.r_range = (cfg.r_range.0.min(n.0.max(2)), cfg.r_range.1);
        }
    }
    if let Some(r) = flags.r_range {
        cfg.r_range = r;
    }
    if let Some(s) = flags.scale {
        cfg.entry_scale = s;
    }
    if let Some(s) = flags.diag_scale {
        cfg.diag_scale = s;
    }
    if let Some(t) = cli.tol {
        cfg.tolerance = t;
    }
    cfg
}

fn fuzz_config(target: FuzzTarget, flags: &FuzzFlags, cli: &Cli) -> Result<FuzzConfig, CliError> {
    let base = match target {
        FuzzTarget::Theorem1 => FuzzConfig::theorem1(),
        FuzzTarget::Lemma1 => FuzzConfig::lemma1(),
        FuzzTarget::BoundsVsChi => FuzzConfig::bounds_vs_chi(),
        FuzzTarget::Signless => FuzzConfig::signless(),
    };
    let cfg = apply_flags(base, flags, cli);
    cfg.validate()?;
    Ok(cfg)
}

fn record_cells(kind: &str, r: &TrialRecord) -> Vec<Cell> {
    vec![
        kind.into(),
        r.trial.into(),
        to_value(&r.family).as_str().unwrap_or_default().into(),
        r.label.clone().into(),
        r.tags.n.into(),
        r.gap.into(),
        r.threshold.into(),
        r.graph6.clone().into(),
        r.digest.clone().into(),
    ]
}

const RECORD_HEADERS: [&str; 9] = ["kind", "trial", "family", "label", "n", "gap", "threshold", "graph6", "digest"];

fn fuzz_output(s: &FuzzSummary) -> Output {
    let mut rows: Vec<Vec<Cell>> = s.violations.iter().map(|r| record_cells("violation", r)).collect();
    rows.extend(s.near_equality.iter().map(|r| record_cells("near-equality", r)));
    let mut summary = vec![
        ("campaign", to_value(&s.campaign).as_str().unwrap_or_default().to_string()),
        ("trials", s.trials_run.to_string()),
        ("violations", s.violation_count.to_string()),
        ("near_equality", s.near_equality_count.to_string()),
        (
            "min_gap",
            s.min_gap.map_or("none".into(), |g| format_float(g, 4)),
        ),
    ];
    for sub in &s.subcampaigns {
        summary.push(("check", format!("{}: {} trials, {} failures", sub.name, sub.trials, sub.failures)));
    }
    Output {
        results: to_value(s),
        table: Table {
            headers: RECORD_HEADERS.to_vec(),
            rows,
        },
        summary,
        exit_code: if s.passed() { 0 } else { 1 },
    }
}

fn explore_output(report: &ExploreReport) -> Output {
    let rows = report
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut cells = record_cells(&(i + 1).to_string(), r);
            cells.push(r.tags.r.into());
            cells
        })
        .collect();
    let mut headers = RECORD_HEADERS.to_vec();
    headers[0] = "rank";
    headers.push("r");
    Output {
        results: to_value(report),
        table: Table { headers, rows },
        summary: vec![
            ("trials", report.trials_run.to_string()),
            ("near_equality", report.near_equality_count.to_string()),
        ],
        exit_code: 0,
    }
}

fn chi_output(g: &Graph, outcome: &ChromaticOutcome) -> Output {
    let colors = outcome
        .coloring()
        .colors()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let (lower, upper) = outcome.bounds();
    Output {
        results: serde_json::json!({ "n": g.n(), "m": g.edge_count(), "outcome": outcome }),
        table: Table {
            headers: vec!["n", "m", "chi", "lower", "upper", "coloring"],
            rows: vec![vec![
                g.n().into(),
                g.edge_count().into(),
                outcome.exact().into(),
                lower.into(),
                upper.into(),
                colors.into(),
            ]],
        },
        summary: Vec::new(),
        exit_code: 0,
    }
}

fn alpha_output(g: &Graph, outcome: &IndependenceOutcome) -> Output {
    let set = outcome.set().iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    Output {
        results: serde_json::json!({ "n": g.n(), "m": g.edge_count(), "outcome": outcome }),
        table: Table {
            headers: vec!["n", "m", "alpha", "set"],
            rows: vec![vec![
                g.n().into(),
                g.edge_count().into(),
                outcome.exact().into(),
                set.into(),
            ]],
        },
        summary: Vec::new(),
        exit_code: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("chromaspec").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..12"), Ok((4, 12)));
        assert_eq!(parse_range("4..=12"), Ok((4, 12)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("9..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(2.640_285_137_491_23, 4), 2.64);
        assert_eq!(round_sig(1.0 / 3.0, 10), 0.3333333333);
        assert_eq!(round_sig(0.0, 4), 0.0);
        assert!(round_sig(f64::NAN, 4).is_nan());
    }

    #[test]
    fn bounds_inline_graph6() {
        let (code, out, _) = run_str(&["bounds", "--graph6", "C~"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["results"]["nikiforov"], 4.0);
        assert_eq!(v["results"]["chi"]["chi"], 4);
        assert_eq!(v["timing"], Value::Null);
    }

    #[test]
    fn bounds_from_stdin_and_edgeless_exit() {
        let (code, out, _) = run_str(&["bounds", "-"], "D??\n");
        assert_eq!(code, 3);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["hoffman"], Value::Null);
        assert_eq!(v["results"]["chi"]["chi"], 1);
    }

    #[test]
    fn parse_errors_exit_2() {
        let (code, out, err) = run_str(&["bounds", "-"], "p edge 2 1\ne 1 3\n");
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("line 2"), "{err}");
        let (code, _, _) = run_str(&["bounds"], "");
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["table", "dodecahedron", "1..2"], "");
        assert_eq!(code, 2);
    }

    #[test]
    fn csv_and_md_projections() {
        let (code, out, _) = run_str(&["--format", "csv", "table", "complete", "2..4"], "");
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,vertices,hoffman,hoffman_ceil,nikiforov,nikiforov_ceil,chi");
        assert_eq!(lines.len(), 4);
        assert!(lines[3].starts_with("4,4,4,4,4,4,4"), "{}", lines[3]);
        let (_, md, _) = run_str(&["--format", "md", "bounds", "--graph6", "Dhc"], "");
        assert!(md.contains("| n | m |"), "{md}");
    }

    #[test]
    fn fuzz_exit_codes() {
        let (code, out, _) = run_str(&["fuzz", "theorem1", "--trials", "0"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["trials_run"], 0);
        let (code, _, err) = run_str(&["fuzz", "theorem1", "--n", "2..5", "--r", "3..4"], "");
        assert_eq!(code, 2);
        assert!(err.contains("invalid configuration"), "{err}");
    }

    #[test]
    fn encode_round_trip() {
        let (code, out, _) = run_str(&["--format", "csv", "encode", "-"], "4\n0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n");
        assert_eq!(code, 0);
        assert_eq!(out.lines().nth(1), Some("C~,4,6"));
    }
}
