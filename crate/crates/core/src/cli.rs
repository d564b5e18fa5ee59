//! Command-line front end. [`dispatch`] takes an argument vector and writers
//! so the whole interface is testable in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{tree_max_bound, unicyclic_max_bound};
use crate::canon::canonical_code;
use crate::constructions::{extremal_family, GraphClass, GraphClassSpec};
use crate::enumerate::{class_sizes, enumerate_class, DegreeFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::indices::{index_value, sum_connectivity, IndexKind};
use crate::radical::RadicalValue;
use crate::verify::{
    index_correlation, monotonicity_suite, verify_all, verify_maximum, verify_sweep,
    verify_unicyclic_ranking, ExtremalReport, RankingReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sumconn",
    version,
    about = "Connectivity indices of trees and unicyclic graphs"
)]
struct Cli {
    /// Cap on worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact index of one graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "sum")]
        index: IndexKind,
        #[arg(long)]
        json: bool,
    },
    /// The extremal graphs of a family.
    Construct {
        #[command(flatten)]
        family: Family,
        /// DOT instead of graph6.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form maximum of the sum-connectivity index over a family.
    Bound {
        #[command(flatten)]
        family: Family,
        #[arg(long)]
        json: bool,
    },
    /// Every graph of a class up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        /// Keep only graphs of this maximum degree.
        #[arg(long)]
        delta: Option<usize>,
        /// Print class sizes per maximum degree instead of graphs.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare brute-force maxima with the closed forms.
    Verify(VerifyArgs),
    /// Pearson correlation of the two indices over trees.
    Correlate {
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Maximum degree cap.
        #[arg(long, default_value_t = 4)]
        delta: usize,
        #[arg(long)]
        json: bool,
    },
    /// Re-encode a graph as graph6 or DOT.
    Export {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        dot: bool,
        /// Relabel canonically first.
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// File with one `u v` edge per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Family {
    #[arg(long)]
    class: GraphClass,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    delta: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum VerifyClass {
    Tree,
    Unicyclic,
    Toptwo,
    Transforms,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "all")]
    class: Option<VerifyClass>,
    #[arg(long)]
    n: Option<usize>,
    /// One maximum degree; all of `2..n` when omitted.
    #[arg(long)]
    delta: Option<usize>,
    /// Full sweep: every family, the ranking and the transform checks.
    #[arg(long, conflicts_with_all = ["class", "n", "delta"])]
    all: bool,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the random transform instances.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random instances per transform.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.g6, &self.edges) {
            (Some(text), _) => parse_graph6(text),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                Graph::parse_edge_list(&text, None)
            }
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

impl Family {
    fn spec(&self) -> Result<GraphClassSpec> {
        GraphClassSpec::new(self.class, self.n, self.delta)
    }
}

/// Command output plus the exit code it implies.
type Outcome = Result<i32>;

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(io_error)?
    };
}

fn print_terms(out: &mut dyn Write, value: &RadicalValue) -> Result<()> {
    say!(out, "exact: {value}");
    for (s, coef) in value.terms() {
        say!(out, "  sqrt({s}): {coef}");
    }
    say!(out, "float: {}", value.to_f64());
    Ok(())
}

#[derive(Serialize)]
struct ComputeOutput {
    index: IndexKind,
    n: usize,
    m: usize,
    value: RadicalValue,
}

fn compute(out: &mut dyn Write, input: &GraphInput, index: IndexKind, json: bool) -> Outcome {
    let g = input.load()?;
    let value = index_value(&g, index)?;
    if json {
        json_line(
            out,
            &ComputeOutput {
                index,
                n: g.n(),
                m: g.m(),
                value,
            },
        )?;
    } else {
        print_terms(out, &value)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ConstructedGraph {
    graph6: String,
    code: crate::canon::CanonicalCode,
    sum_connectivity: RadicalValue,
}

fn construct(out: &mut dyn Write, family: &Family, dot: bool, json: bool) -> Outcome {
    let spec = family.spec()?;
    let graphs = extremal_family(&spec)?;
    if json {
        let listing: Vec<ConstructedGraph> = graphs
            .iter()
            .map(|g| ConstructedGraph {
                graph6: emit_graph6(g),
                code: canonical_code(g).expect("constructions are connected"),
                sum_connectivity: sum_connectivity(g).expect("constructions have edges"),
            })
            .collect();
        json_line(out, &listing)?;
    } else {
        for (i, g) in graphs.iter().enumerate() {
            if dot {
                write!(
                    out,
                    "{}",
                    g.to_dot(&format!("{}_{}_{}_{i}", spec.class, spec.n, spec.delta))
                )
                .map_err(io_error)?;
            } else {
                say!(out, "{}", emit_graph6(g));
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BoundOutput {
    spec: GraphClassSpec,
    branch: crate::constructions::Branch,
    value: RadicalValue,
}

fn bound(out: &mut dyn Write, family: &Family, json: bool) -> Outcome {
    let spec = family.spec()?;
    let value = match spec.class {
        GraphClass::Tree => tree_max_bound(spec.n, spec.delta)?,
        GraphClass::Unicyclic => unicyclic_max_bound(spec.n, spec.delta)?,
    };
    if json {
        json_line(
            out,
            &BoundOutput {
                spec,
                branch: spec.branch(),
                value,
            },
        )?;
    } else {
        say!(out, "{spec} {:?}", spec.branch());
        print_terms(out, &value)?;
    }
    Ok(EXIT_OK)
}

fn enumerate(
    out: &mut dyn Write,
    class: GraphClass,
    n: usize,
    delta: Option<usize>,
    count_only: bool,
    json: bool,
) -> Outcome {
    if count_only {
        let mut sizes = class_sizes(class, n)?;
        if let Some(d) = delta {
            sizes.retain(|&k, _| k == d);
        }
        if json {
            json_line(out, &sizes)?;
        } else {
            say!(out, "delta\tcount");
            for (d, c) in &sizes {
                say!(out, "{d}\t{c}");
            }
            say!(out, "total\t{}", sizes.values().sum::<usize>());
        }
        return Ok(EXIT_OK);
    }
    let filter = delta.map_or(DegreeFilter::any(), DegreeFilter::exactly);
    let members = enumerate_class(class, n, filter)?;
    if json {
        let lines: Vec<String> = members.iter().map(|m| emit_graph6(&m.graph)).collect();
        json_line(out, &lines)?;
    } else {
        for m in &members {
            say!(out, "{}", emit_graph6(&m.graph));
        }
    }
    Ok(EXIT_OK)
}

fn describe_extremal(out: &mut dyn Write, r: &ExtremalReport) -> Result<()> {
    let verdict = if r.passed() { "ok" } else { "MISMATCH" };
    let max = r
        .brute_max
        .as_ref()
        .map_or("-".to_string(), |v| format!("{:.10}", v.to_f64()));
    say!(
        out,
        "{verdict}\t{}\tsize={}\tmax={max}\tbound={:.10}\targmax={}\texpected={}\tk={:?}",
        r.spec,
        r.class_size,
        r.formula_value.to_f64(),
        r.argmax_codes.len(),
        r.expected_codes.len(),
        r.k_profile
    );
    for g6 in &r.argmax_graph6 {
        say!(out, "  {g6}");
    }
    Ok(())
}

fn describe_ranking(out: &mut dyn Write, r: &RankingReport) -> Result<()> {
    let verdict = if r.passed() { "ok" } else { "MISMATCH" };
    say!(
        out,
        "{verdict}\tunicyclic ranking n={}\tsize={}",
        r.n,
        r.class_size
    );
    for (rank, entry) in r.observed.iter().enumerate() {
        say!(
            out,
            "  rank {}: {} ({:.10}), {} graph(s)",
            rank + 1,
            entry.value,
            entry.value.to_f64(),
            entry.codes.len()
        );
        for g6 in &entry.graph6 {
            say!(out, "    {g6}");
        }
    }
    Ok(())
}

fn write_report<T: Serialize>(path: &Option<PathBuf>, report: &T) -> Result<()> {
    if let Some(path) = path {
        let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn verdict(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn verify(out: &mut dyn Write, args: &VerifyArgs) -> Outcome {
    if args.all {
        let report = verify_all(args.trials, args.seed)?;
        for r in report.trees.iter().chain(&report.unicyclic) {
            describe_extremal(out, r)?;
        }
        for r in &report.rankings {
            describe_ranking(out, r)?;
        }
        let m = &report.monotonicity;
        say!(
            out,
            "{}\ttransforms seed={} merge={}/{} reattach={}/{}",
            if m.passed() { "ok" } else { "MISMATCH" },
            m.seed,
            m.merge.trials - m.merge.violations.len(),
            m.merge.trials,
            m.reattach.trials - m.reattach.violations.len(),
            m.reattach.trials
        );
        write_report(&args.json, &report)?;
        return Ok(verdict(report.passed));
    }
    let class = args.class.expect("clap requires --class without --all");
    if class == VerifyClass::Transforms {
        let report = monotonicity_suite(args.trials, args.seed);
        if let Some(w) = &report.warning {
            say!(out, "warning: {w}");
        }
        for (name, s) in [("merge", &report.merge), ("reattach", &report.reattach)] {
            say!(
                out,
                "{name}: {} trials, {} violations, {} redraws",
                s.trials,
                s.violations.len(),
                s.redraws
            );
            for v in &s.violations {
                say!(
                    out,
                    "  {} -> {} {:?} {}",
                    v.before,
                    v.after,
                    v.witnesses,
                    v.detail
                );
            }
        }
        write_report(&args.json, &report)?;
        return Ok(verdict(report.passed()));
    }
    let n = args
        .n
        .ok_or_else(|| Error::Usage("--n is required".into()))?;
    if class == VerifyClass::Toptwo {
        let report = verify_unicyclic_ranking(n)?;
        describe_ranking(out, &report)?;
        write_report(&args.json, &report)?;
        return Ok(verdict(report.passed()));
    }
    let class = match class {
        VerifyClass::Tree => GraphClass::Tree,
        _ => GraphClass::Unicyclic,
    };
    let reports = match args.delta {
        Some(delta) => vec![verify_maximum(class, n, delta)?],
        None => verify_sweep(class, n..=n)?,
    };
    for r in &reports {
        describe_extremal(out, r)?;
    }
    match args.delta {
        Some(_) => write_report(&args.json, &reports[0])?,
        None => write_report(&args.json, &reports)?,
    }
    Ok(verdict(reports.iter().all(ExtremalReport::passed)))
}

fn correlate(out: &mut dyn Write, n: usize, delta: usize, json: bool) -> Outcome {
    let report = index_correlation(n, delta)?;
    if json {
        json_line(out, &report)?;
    } else {
        say!(
            out,
            "trees n={n} delta<={delta}: {} graphs, pearson r = {:.6}",
            report.sample_size,
            report.coefficient
        );
    }
    Ok(EXIT_OK)
}

fn export(out: &mut dyn Write, input: &GraphInput, dot: bool, canonical: bool) -> Outcome {
    let mut g = input.load()?;
    if canonical {
        g = crate::canon::canonical_graph(&g)?;
    }
    if dot {
        write!(out, "{}", g.to_dot("G")).map_err(io_error)?;
    } else {
        say!(out, "{}", emit_graph6(&g));
    }
    Ok(EXIT_OK)
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Compute { input, index, json } => compute(out, input, *index, *json),
        Command::Construct { family, dot, json } => construct(out, family, *dot, *json),
        Command::Bound { family, json } => bound(out, family, *json),
        Command::Enumerate {
            class,
            n,
            delta,
            count_only,
            json,
        } => enumerate(out, *class, *n, *delta, *count_only, *json),
        Command::Verify(args) => verify(out, args),
        Command::Correlate { n, delta, json } => correlate(out, *n, *delta, *json),
        Command::Export {
            input,
            dot,
            canonical,
        } => export(out, input, *dot, *canonical),
    }
}

/// Parses `argv` (program name first) and runs the command. Returns 0 on
/// success, 1 when a verification finds a mismatch, 2 on usage or runtime
/// errors, which go to `err`.
pub fn dispatch<I, T>(argv: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        pool = pool.num_threads(t.max(1));
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| run(cli, out)),
        Err(e) => Err(Error::Io(format!("thread pool: {e}"))),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
