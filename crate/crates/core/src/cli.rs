//! Command-line front end: `compute`, `verify`, `sweep` and `bench`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse or parameter
//! error, 3 solver capacity exceeded, 4 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;

use crate::closed_forms::{
    closed_form, closed_form_tree, join_upper_bounds, join_upper_bounds_strict, ClosedFormValue,
};
use crate::engine::{solve_exact, ExactResult, SolveOptions, SOLVER_CAP};
use crate::error::{Error, Result};
use crate::family::{generate, random_graph, random_tree_with, seeded_rng, FamilySpec};
use crate::graph::Graph;
use crate::io::{
    parse_edge_list, parse_graph6, write_graph6, write_records, ReportFormat, ReportRecord, Source,
};
use crate::labelling::stats;
use crate::naive::solve_naive;
use crate::tree::tree_optimal_labelling;
use crate::witness::construct_witness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "cordial", version, about = "Measures of closeness to cordiality for graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one graph exactly (from --input, stdin, or a --family spec).
    Compute(ComputeArgs),
    /// Compare closed forms with exact values over a parameter range.
    Verify(SuiteArgs),
    /// Emit one CSV/JSON record per instance of a parameter range.
    Sweep(SweepArgs),
    /// Time the Gray-code engine against the naive oracle.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Complete,
    Star,
    Multipartite,
    Wheel,
    Fan,
    Tree,
    Join,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, Default, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<FamilyName>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Part sizes for multipartite graphs, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    #[arg(long)]
    pub min: Option<usize>,
    #[arg(long)]
    pub max: Option<usize>,
    /// Largest total of part sizes for the multipartite suite.
    #[arg(long)]
    pub total_max: Option<usize>,
    #[arg(long)]
    pub samples: Option<usize>,
    /// Seed for the ChaCha8 generator used by the tree and join suites.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Input format; detected from the content when omitted.
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Clone, Debug, Args)]
pub struct SuiteArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Use the parity-dependent second join bound (+1 only for two odd sides).
    #[arg(long)]
    pub strict_join: bool,
}

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub suite: SuiteArgs,
    /// csv or json; defaults from the --out extension, else csv.
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall-clock time per instance (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Parses `std::env::args`, runs, and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Io(_) => EXIT_IO,
        Error::Defect(_) => EXIT_MISMATCH,
        _ => EXIT_PARSE,
    }
}

pub fn run(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute(args) => cmd_compute(&args, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Sweep(args) => cmd_sweep(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::Parameter(format!("--{flag} is required for this family")))
    };
    let spec = match args.family {
        Some(FamilyName::Path) => FamilySpec::Path { n: need(args.n, "n")? },
        Some(FamilyName::Cycle) => FamilySpec::Cycle { n: need(args.n, "n")? },
        Some(FamilyName::Complete) => FamilySpec::Complete { n: need(args.n, "n")? },
        Some(FamilyName::Star) => FamilySpec::Star { n: need(args.n, "n")? },
        Some(FamilyName::Wheel) => FamilySpec::Wheel { n: need(args.n, "n")? },
        Some(FamilyName::Fan) => FamilySpec::Fan {
            m: need(args.m, "m")?,
            n: need(args.n, "n")?,
        },
        Some(FamilyName::Multipartite) => FamilySpec::Multipartite {
            parts: args
                .parts
                .clone()
                .ok_or_else(|| Error::Parameter("--parts is required for multipartite".into()))?,
        },
        Some(FamilyName::Tree | FamilyName::Join) => {
            return Err(Error::Parameter(
                "tree and join are sampled families; use verify or sweep".into(),
            ))
        }
        None => return Err(Error::Parameter("--family is required".into())),
    };
    spec.validate()?;
    Ok(spec)
}

fn single_graph(args: &FamilyArgs) -> Result<(String, String, Graph)> {
    if args.family == Some(FamilyName::Tree) {
        let n = args
            .n
            .ok_or_else(|| Error::Parameter("--n is required for tree".into()))?;
        let g = random_tree_with(n, &mut seeded_rng(args.seed))?;
        return Ok(("tree".into(), format!("n={n},seed={}", args.seed), g));
    }
    let spec = family_spec(args)?;
    Ok((spec.tag().into(), spec.params(), generate(&spec)?))
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match path {
        Some(p) => buf = fs::read(p)?,
        None => {
            io::stdin().read_to_end(&mut buf)?;
        }
    }
    Ok(buf)
}

fn parse_input(bytes: &[u8], format: Option<Format>) -> Result<Graph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Syntax {
        line: 1,
        msg: format!("input is not UTF-8: {e}"),
    });
    let looks_like_edge_list = || {
        text.as_ref().is_ok_and(|t| {
            t.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .is_some_and(|l| l.starts_with("n ") || l == "n")
        })
    };
    match format {
        Some(Format::Edgelist) => parse_edge_list(text?),
        Some(Format::Graph6) => parse_graph6(bytes),
        None if looks_like_edge_list() => parse_edge_list(text?),
        None => parse_graph6(bytes),
        Some(other) => Err(Error::Parameter(format!(
            "--format {other:?} is not an input format; use graph6 or edgelist"
        ))),
    }
}

fn solve(g: &Graph, threads: usize) -> Result<(ExactResult, Duration)> {
    let start = Instant::now();
    let r = solve_exact(g, SolveOptions { threads })?;
    Ok((r, start.elapsed()))
}

pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    let (family, params, g) = if args.family.family.is_some() {
        if args.input.is_some() {
            return Err(Error::Parameter("give either --input or --family, not both".into()));
        }
        single_graph(&args.family)?
    } else {
        let bytes = read_input(args.input.as_ref())?;
        let g = parse_input(&bytes, args.format)?;
        let params = args
            .input
            .as_ref()
            .map(|p| format!("input={}", p.display()))
            .unwrap_or_else(|| "input=stdin".into());
        ("custom".into(), params, g)
    };
    let (r, elapsed) = solve(&g, args.threads)?;
    writeln!(out, "family: {family}")?;
    writeln!(out, "params: {params}")?;
    writeln!(out, "n: {}", g.n())?;
    writeln!(out, "m: {}", g.m())?;
    writeln!(out, "d1: {}", r.d1)?;
    writeln!(out, "d2: {}", r.d2)?;
    writeln!(out, "witness_d1: {}", r.d1_witness)?;
    writeln!(out, "witness_d2: {}", r.d2_witness)?;
    writeln!(out, "cordial: {}", r.cordial)?;
    writeln!(out, "elapsed_ms: {}", elapsed.as_millis())?;
    Ok(EXIT_OK)
}

/// One unit of work in a verify or sweep run.
#[derive(Clone, Debug)]
pub enum Instance {
    Family(FamilySpec),
    Tree { sample: usize, seed: u64, graph: Graph },
    Join { sample: usize, seed: u64, left: Graph, right: Graph },
}

impl Instance {
    fn order(&self) -> usize {
        match self {
            Instance::Family(spec) => spec.order(),
            Instance::Tree { graph, .. } => graph.n(),
            Instance::Join { left, right, .. } => left.n() + right.n(),
        }
    }
}

fn range(args: &FamilyArgs, lo: usize, hi: usize) -> Result<std::ops::RangeInclusive<usize>> {
    let (a, b) = match (args.n, args.min, args.max) {
        (Some(n), None, None) => (n, n),
        (_, min, max) => (min.unwrap_or(lo), max.unwrap_or(hi)),
    };
    if a > b {
        return Err(Error::Parameter(format!("empty range: --min {a} exceeds --max {b}")));
    }
    Ok(a..=b)
}

/// All multisets of positive part sizes (listed non-increasing) with total at most `total_max`.
pub fn partitions_up_to(total_max: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for p in (1..=cap.min(remaining)).rev() {
            current.push(p);
            out.push(current.clone());
            extend(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(total_max, total_max, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
    out
}

/// Join suite pairs: each side has a uniform order in `1..=max_side` and
/// independent edges with probability 1/2.
pub fn random_join_pairs(samples: usize, max_side: usize, seed: u64) -> Result<Vec<(Graph, Graph)>> {
    let mut rng = seeded_rng(seed);
    (0..samples)
        .map(|_| {
            let n1 = rng.random_range(1..=max_side);
            let left = random_graph(n1, 0.5, &mut rng)?;
            let n2 = rng.random_range(1..=max_side);
            let right = random_graph(n2, 0.5, &mut rng)?;
            Ok((left, right))
        })
        .collect()
}

pub fn instances(args: &FamilyArgs) -> Result<Vec<Instance>> {
    let family = args
        .family
        .ok_or_else(|| Error::Parameter("--family is required".into()))?;
    let each = |r: std::ops::RangeInclusive<usize>, f: fn(usize) -> FamilySpec| {
        r.map(|n| Instance::Family(f(n))).collect::<Vec<_>>()
    };
    let list = match family {
        FamilyName::Path => each(range(args, 1, 16)?, |n| FamilySpec::Path { n }),
        FamilyName::Cycle => each(range(args, 3, 18)?, |n| FamilySpec::Cycle { n }),
        FamilyName::Complete => each(range(args, 1, 16)?, |n| FamilySpec::Complete { n }),
        FamilyName::Star => each(range(args, 1, 15)?, |n| FamilySpec::Star { n }),
        FamilyName::Wheel => each(range(args, 4, 18)?, |n| FamilySpec::Wheel { n }),
        FamilyName::Fan => {
            let (m_max, n_max) = (args.m.unwrap_or(5), args.n.unwrap_or(8));
            let lo = args.min.unwrap_or(1);
            (lo..=m_max)
                .flat_map(|m| (lo..=n_max).map(move |n| Instance::Family(FamilySpec::Fan { m, n })))
                .collect()
        }
        FamilyName::Multipartite => match &args.parts {
            Some(parts) => vec![Instance::Family(FamilySpec::Multipartite { parts: parts.clone() })],
            None => partitions_up_to(args.total_max.unwrap_or(12))
                .into_iter()
                .map(|parts| Instance::Family(FamilySpec::Multipartite { parts }))
                .collect(),
        },
        FamilyName::Tree => {
            let mut rng = seeded_rng(args.seed);
            let sizes = match args.n {
                Some(n) => n..=n,
                None => range(args, 2, 16)?,
            };
            (0..args.samples.unwrap_or(50))
                .map(|sample| {
                    let n = rng.random_range(sizes.clone());
                    let graph = random_tree_with(n, &mut rng)?;
                    Ok(Instance::Tree { sample, seed: args.seed, graph })
                })
                .collect::<Result<_>>()?
        }
        FamilyName::Join => random_join_pairs(
            args.samples.unwrap_or(200),
            args.max.unwrap_or(8).max(1),
            args.seed,
        )?
        .into_iter()
        .enumerate()
        .map(|(sample, (left, right))| Instance::Join { sample, seed: args.seed, left, right })
        .collect(),
    };
    if list.is_empty() {
        return Err(Error::Parameter("the requested range is empty".into()));
    }
    if let Some(big) = list.iter().find(|i| i.order() > SOLVER_CAP || i.order() == 0) {
        return Err(Error::Capacity(format!(
            "an instance has {} vertices; the solver accepts 1..={SOLVER_CAP}",
            big.order()
        )));
    }
    Ok(list)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    InInterval,
    BoundHeld,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::InInterval => "IN-INTERVAL",
            Verdict::BoundHeld => "BOUND-HELD",
            Verdict::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub record: ReportRecord,
    pub closed_d1: ClosedFormValue,
    pub closed_d2: ClosedFormValue,
    pub verdict: Verdict,
    pub note: Option<String>,
}

fn g6(g: &Graph) -> String {
    String::from_utf8(write_graph6(g)).expect("graph6 is ASCII")
}

pub fn evaluate(instance: &Instance, threads: usize, strict_join: bool) -> Result<Evaluation> {
    let start = Instant::now();
    let (family, params, graph, closed_d1, closed_d2, mut note) = match instance {
        Instance::Family(spec) => {
            let cf = closed_form(spec)?;
            let note = construct_witness(spec).err().map(|e| format!("witness: {e}"));
            (spec.tag().to_string(), spec.params(), generate(spec)?, cf.d1, cf.d2, note)
        }
        Instance::Tree { sample, seed, graph } => {
            let n = graph.n();
            let cf = closed_form_tree(n)?;
            let note = match tree_optimal_labelling(graph).and_then(|f| stats(graph, &f)) {
                Ok(s) if s.v_diff() == (n % 2) as i64 && s.delta_e == 1 - n % 2 => None,
                Ok(s) => Some(format!(
                    "tree labelling gives v0-v1={}, e0-e1={}",
                    s.v_diff(),
                    s.e_diff()
                )),
                Err(e) => Some(format!("tree labelling: {e}")),
            };
            let params = format!("n={n},seed={seed},sample={sample},g6={}", g6(graph));
            ("tree".to_string(), params, graph.clone(), cf.d1, cf.d2, note)
        }
        Instance::Join { sample, seed, left, right } => {
            let a = solve_exact(left, SolveOptions { threads })?;
            let b = solve_exact(right, SolveOptions { threads })?;
            let bounds = if strict_join {
                join_upper_bounds_strict(a.d1, b.d1, a.d2, b.d2, left.n(), right.n())
            } else {
                join_upper_bounds(a.d1, b.d1, a.d2, b.d2)
            };
            let params = format!("seed={seed},sample={sample},g6={}+{}", g6(left), g6(right));
            (
                "join".to_string(),
                params,
                left.join(right)?,
                ClosedFormValue::interval(0, bounds.d1_upper),
                ClosedFormValue::interval(0, bounds.d2_upper),
                None,
            )
        }
    };
    let exact = solve_exact(&graph, SolveOptions { threads })?;
    let holds = closed_d1.contains(exact.d1) && closed_d2.contains(exact.d2);
    if !holds && note.is_none() {
        note = Some("exact value outside the closed form".into());
    }
    let verdict = match (note.is_none(), instance) {
        (false, _) => Verdict::Mismatch,
        (true, Instance::Join { .. }) => Verdict::BoundHeld,
        (true, _) if closed_d1.is_exact() && closed_d2.is_exact() => Verdict::Equal,
        (true, _) => Verdict::InInterval,
    };
    let record = ReportRecord {
        family,
        params,
        n: graph.n(),
        m: graph.m(),
        d1: exact.d1,
        d2: exact.d2,
        d1_lower: closed_d1.lo(),
        d1_upper: closed_d1.hi(),
        witness_d1: exact.d1_witness.to_bit_string(),
        witness_d2: exact.d2_witness.to_bit_string(),
        cordial: exact.cordial,
        source: Source::Both,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    Ok(Evaluation { record, closed_d1, closed_d2, verdict, note })
}

pub fn cmd_verify(args: &SuiteArgs, out: &mut dyn Write) -> Result<i32> {
    let list = instances(&args.family)?;
    let sampled = matches!(args.family.family, Some(FamilyName::Tree | FamilyName::Join));
    if sampled {
        writeln!(out, "# prng=ChaCha8 seed={}", args.family.seed)?;
    }
    let mut rows = Vec::with_capacity(list.len());
    for inst in &list {
        rows.push(evaluate(inst, args.threads, args.strict_join)?);
    }
    let width = rows.iter().map(|r| r.record.params.len()).max().unwrap_or(6).max(6);
    writeln!(
        out,
        "{:<12} {:<width$} {:>9} {:>9} {:>8} {:>8}  verdict",
        "family", "params", "closed_d1", "closed_d2", "exact_d1", "exact_d2"
    )?;
    let mut mismatches = 0;
    for r in &rows {
        let mut line = format!(
            "{:<12} {:<width$} {:>9} {:>9} {:>8} {:>8}  {}",
            r.record.family,
            r.record.params,
            r.closed_d1.to_string(),
            r.closed_d2.to_string(),
            r.record.d1,
            r.record.d2,
            r.verdict.as_str()
        );
        if let Some(note) = &r.note {
            let _ = write!(line, "  ({note})");
        }
        writeln!(out, "{line}")?;
        if r.verdict == Verdict::Mismatch {
            mismatches += 1;
        }
    }
    writeln!(out, "# {} rows, {} mismatches", rows.len(), mismatches)?;
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let format = match (args.format, &args.out) {
        (Some(Format::Csv), _) => ReportFormat::Csv,
        (Some(Format::Json), _) => ReportFormat::Json,
        (Some(other), _) => {
            return Err(Error::Parameter(format!("sweep writes csv or json, not {other:?}")))
        }
        (None, Some(p)) if p.extension().is_some_and(|e| e == "json") => ReportFormat::Json,
        (None, _) => ReportFormat::Csv,
    };
    let list = instances(&args.suite.family)?;
    let mut records = Vec::with_capacity(list.len());
    for inst in &list {
        let mut rec = evaluate(inst, args.suite.threads, args.suite.strict_join)?.record;
        if !args.timings {
            rec.elapsed_ms = 0;
        }
        records.push(rec);
    }
    let bytes = write_records(&records, format)?;
    match &args.out {
        Some(path) => fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let (family, params, g) = single_graph(&args.family)?;
    let t0 = Instant::now();
    let naive = solve_naive(&g)?;
    let naive_time = t0.elapsed();
    let (engine, engine_time) = solve(&g, args.threads)?;
    if naive != engine {
        return Err(Error::Defect(format!(
            "engine ({}, {}) disagrees with the naive oracle ({}, {})",
            engine.d1, engine.d2, naive.d1, naive.d2
        )));
    }
    let rate = |d: Duration| engine.labellings_visited as f64 / d.as_secs_f64().max(1e-9);
    writeln!(out, "instance: {family}({params}) vertices={} edges={}", g.n(), g.m())?;
    writeln!(out, "labellings: {}", engine.labellings_visited)?;
    writeln!(out, "d1: {}  d2: {}", engine.d1, engine.d2)?;
    writeln!(
        out,
        "naive:  {:>10.3} ms  {:>14.0} labellings/s",
        naive_time.as_secs_f64() * 1e3,
        rate(naive_time)
    )?;
    writeln!(
        out,
        "engine: {:>10.3} ms  {:>14.0} labellings/s  threads={}",
        engine_time.as_secs_f64() * 1e3,
        rate(engine_time),
        args.threads
    )?;
    writeln!(
        out,
        "speedup: {:.1}x",
        naive_time.as_secs_f64() / engine_time.as_secs_f64().max(1e-9)
    )?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_count() {
        // p(1) + ... + p(6) = 1 + 2 + 3 + 5 + 7 + 11.
        assert_eq!(partitions_up_to(6).len(), 29);
        assert_eq!(partitions_up_to(12).len(), 271);
        assert!(partitions_up_to(12).iter().all(|p| p.iter().sum::<usize>() <= 12));
    }

    #[test]
    fn format_detection() {
        let g = parse_input(b"n 3\n0 1\n", None).unwrap();
        assert_eq!(g.m(), 1);
        let g = parse_input(b"C~\n", None).unwrap();
        assert_eq!(g.m(), 6);
        assert!(parse_input(b"C~", Some(Format::Csv)).is_err());
    }

    #[test]
    fn empty_range_is_rejected() {
        let args = FamilyArgs {
            family: Some(FamilyName::Cycle),
            min: Some(9),
            max: Some(4),
            ..Default::default()
        };
        assert!(matches!(instances(&args), Err(Error::Parameter(_))));
    }

    #[test]
    fn oversized_suite_is_a_capacity_error() {
        let args = FamilyArgs {
            family: Some(FamilyName::Complete),
            min: Some(30),
            max: Some(31),
            ..Default::default()
        };
        let e = instances(&args).unwrap_err();
        assert_eq!(exit_code(&e), EXIT_CAPACITY);
    }
}
