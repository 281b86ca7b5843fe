//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{
    self, at_least, choose_matching, dfs_bound, girth2_bound, girth_bound, matching_bound, max_spanning_tree_containing,
    poljak_turzik, tfree_spanning_bound, BoundReport, MatchingStrategy, Mode, RootPolicy,
};
use crate::coloring::{matching_vizing_bound, ty_bound};
use crate::error::{Error, Result};
use crate::generate::{GeneratorSpec, WeightDistribution};
use crate::graph::WeightedGraph;
use crate::io::{read_graph_file, save_graph};
use crate::oracle::{self, ConjectureConfig, OracleResult, Witness};
use crate::spanning::max_spanning_tree;
use crate::subcubic::{
    lemma_prob_bound, mainprob_cut, mainprobtree_bound, shearer_bound, shortest_odd_tree_cycle, two_thirds_cut,
    DEFAULT_TRIALS, TREE_P,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Every bound the suite knows, in report order.
pub const BOUND_NAMES: [&str; 13] = [
    "poljak_turzik",
    "dfs",
    "matching",
    "girth",
    "tfree_spanning",
    "girth2",
    "matching_vizing",
    "ty",
    "two_thirds",
    "mainprob",
    "shearer",
    "lemma_prob",
    "mainprobtree",
];

#[derive(Debug, Parser)]
#[command(name = "cutbound", version, about = "Certified lower bounds on weighted maximum cuts")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every applicable bound and print a comparison table.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Restrict to these bounds (repeatable).
        #[arg(long = "bound", value_name = "NAME")]
        bounds: Vec<String>,
    },
    /// Run an exact solver.
    Oracle {
        #[arg(value_enum)]
        quantity: OracleQuantity,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check every deterministic bound against its cut and the exact maximum cut.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Check this many random instances instead of a single input.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        /// Largest vertex count for --random.
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
    /// Write a generated graph.
    Generate {
        kind: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Instance ratios for the open conjectures.
    Conjecture {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Spanning trees and maximal matchings sampled at random.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file.
    #[arg(long, conflicts_with = "generate")]
    pub input: Option<PathBuf>,
    /// Generator kind followed by its parameters.
    #[arg(long, num_args = 1.., value_name = "KIND PARAMS")]
    pub generate: Option<Vec<String>>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Samples drawn by Monte Carlo bounds.
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// DFS root.
    #[arg(long, conflicts_with = "best_roots")]
    pub root: Option<usize>,
    /// Sweep every DFS root.
    #[arg(long)]
    pub best_roots: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Replace every exhaustive-solver size guard.
    #[arg(long, value_name = "N")]
    pub max_n_override: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum OracleQuantity {
    Mac,
    RMax,
    MaxDfsWeight,
    FiveCycleCover,
    All,
}

impl CommonArgs {
    fn root_policy(&self) -> RootPolicy {
        match (self.root, self.best_roots) {
            (Some(v), _) => RootPolicy::Fixed(v),
            (None, true) => RootPolicy::Sweep,
            (None, false) => RootPolicy::Auto,
        }
    }

    fn limit(&self, default: usize) -> usize {
        self.max_n_override.unwrap_or(default)
    }
}

impl InputArgs {
    fn load(&self, seed: u64) -> Result<WeightedGraph> {
        match (&self.input, &self.generate) {
            (Some(path), None) => read_graph_file(path),
            (None, Some(spec)) => GeneratorSpec::parse(&spec[0], &spec[1..], seed)?.build(),
            _ => Err(Error::InvalidParameter("give exactly one of --input or --generate".into())),
        }
    }
}

/// Options shared by every bound in the suite.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub roots: RootPolicy,
    pub seed: u64,
    pub trials: usize,
    /// Empty means all of [`BOUND_NAMES`].
    pub only: Vec<String>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { roots: RootPolicy::Auto, seed: 0, trials: DEFAULT_TRIALS, only: Vec::new() }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub outcome: Result<BoundReport>,
}

/// `e*` is the heaviest edge; `k` is as large as the shortest odd cycle
/// closed against the tree allows.
fn girth2_default(graph: &WeightedGraph) -> Result<BoundReport> {
    let e_star = (0..graph.edge_count())
        .max_by(|&a, &b| graph.weight(a).total_cmp(&graph.weight(b)).then(b.cmp(&a)))
        .ok_or_else(|| Error::InvalidParameter("graph has no edges".into()))?;
    let tree = max_spanning_tree_containing(graph, e_star)?;
    let k = match shortest_odd_tree_cycle(graph, &tree) {
        Some(r) => ((r - 1) / 2).max(1),
        None => graph.vertex_count().max(2),
    };
    girth2_bound(graph, Some(&tree), e_star, k)
}

pub fn run_bound(graph: &WeightedGraph, name: &str, options: &SuiteOptions) -> Result<BoundReport> {
    match name {
        "poljak_turzik" => poljak_turzik(graph),
        "dfs" => dfs_bound(graph, options.roots),
        "matching" => matching_bound(graph, &MatchingStrategy::Default),
        "girth" => girth_bound(graph, None, options.roots),
        "tfree_spanning" => tfree_spanning_bound(graph, None),
        "girth2" => girth2_default(graph),
        "matching_vizing" => matching_vizing_bound(graph, &choose_matching(graph, &MatchingStrategy::Default)?),
        "ty" => ty_bound(graph),
        "two_thirds" => two_thirds_cut(graph),
        "mainprob" => mainprob_cut(graph),
        "shearer" => shearer_bound(graph, options.trials, options.seed),
        "lemma_prob" => {
            if !graph.is_connected() {
                return Err(Error::Disconnected);
            }
            lemma_prob_bound(graph, &max_spanning_tree(graph)?, TREE_P, options.trials, options.seed)
        }
        "mainprobtree" => mainprobtree_bound(graph, None, options.trials, options.seed),
        _ => Err(Error::InvalidParameter(format!("unknown bound {name:?}; known: {}", BOUND_NAMES.join(", ")))),
    }
}

pub fn bound_suite(graph: &WeightedGraph, options: &SuiteOptions) -> Vec<SuiteEntry> {
    BOUND_NAMES
        .iter()
        .filter(|name| options.only.is_empty() || options.only.iter().any(|o| o == *name))
        .map(|&name| SuiteEntry { name, outcome: run_bound(graph, name, options) })
        .collect()
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_INTERNAL
            }
        }
    }
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match &config.command {
        Command::Bounds { input, common, bounds } => {
            for name in bounds {
                if !BOUND_NAMES.contains(&name.as_str()) {
                    return Err(Error::InvalidParameter(format!("unknown bound {name:?}")));
                }
            }
            let graph = input.load(common.seed)?;
            cmd_bounds(&graph, common, bounds, out)
        }
        Command::Oracle { quantity, input, common } => {
            let graph = input.load(common.seed)?;
            cmd_oracle(&graph, *quantity, common, out)
        }
        Command::Verify { input, common, random, max_n } => match random {
            Some(count) => cmd_verify_random(*count, *max_n, common, out),
            None => {
                let graph = input.load(common.seed)?;
                let failures = verify_graph(&graph, common, "input", out)?;
                Ok(if failures == 0 { EXIT_OK } else { EXIT_INTERNAL })
            }
        },
        Command::Generate { kind, params, seed, output } => {
            let graph = GeneratorSpec::parse(kind, params, *seed)?.build()?;
            let text = save_graph(&graph);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Conjecture { input, common, samples } => {
            let graph = input.load(common.seed)?;
            cmd_conjecture(&graph, common, *samples, out)
        }
    }
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Deterministic => "deterministic",
        Mode::MonteCarlo => "monte_carlo",
    }
}

fn report_json(graph: &WeightedGraph, report: &BoundReport) -> Value {
    json!({
        "name": report.name,
        "bound_value": report.bound_value,
        "cut_weight": report.cut.weight(),
        "mode": mode_name(report.mode),
        "meets_bound": report.cut_meets_bound(graph),
        "cut": report.cut.bitstring(),
        "details": report.details,
    })
}

fn cmd_bounds(graph: &WeightedGraph, common: &CommonArgs, only: &[String], out: &mut dyn Write) -> Result<i32> {
    let options =
        SuiteOptions { roots: common.root_policy(), seed: common.seed, trials: common.trials, only: only.to_vec() };
    let entries = bound_suite(graph, &options);
    let mut code = EXIT_OK;
    if common.format == Format::Table {
        writeln!(out, "{:<16} {:>14} {:>14}  {:<13} status", "bound", "value", "cut", "mode")?;
    }
    for entry in &entries {
        match &entry.outcome {
            Ok(report) => {
                let broken = report.mode == Mode::Deterministic && !report.cut_meets_bound(graph);
                if broken {
                    code = EXIT_INTERNAL;
                }
                match common.format {
                    Format::Table => writeln!(
                        out,
                        "{:<16} {:>14.6} {:>14.6}  {:<13} {}",
                        entry.name,
                        report.bound_value,
                        report.cut.weight(),
                        mode_name(report.mode),
                        if broken { "CUT BELOW BOUND" } else { "ok" }
                    )?,
                    Format::JsonLines => writeln!(out, "{}", report_json(graph, report))?,
                }
            }
            Err(e) => {
                if !e.is_input_error() {
                    code = EXIT_INTERNAL;
                }
                let status = if e.is_input_error() { "inapplicable" } else { "internal_error" };
                match common.format {
                    Format::Table => {
                        writeln!(out, "{:<16} {:>14} {:>14}  {:<13} {status}: {e}", entry.name, "-", "-", "-")?
                    }
                    Format::JsonLines => {
                        writeln!(out, "{}", json!({ "name": entry.name, "status": status, "reason": e.to_string() }))?
                    }
                }
            }
        }
    }
    Ok(code)
}

fn run_oracle(graph: &WeightedGraph, quantity: OracleQuantity, common: &CommonArgs) -> Result<OracleResult> {
    match quantity {
        OracleQuantity::Mac => oracle::exact_max_cut_with_limit(graph, common.limit(oracle::MAX_CUT_LIMIT)),
        OracleQuantity::RMax => oracle::max_b_subgraph_with_limit(graph, common.limit(oracle::B_SUBGRAPH_LIMIT)),
        OracleQuantity::MaxDfsWeight => {
            oracle::max_dfs_tree_weight_with_limit(graph, common.limit(oracle::DFS_TREE_LIMIT))
        }
        OracleQuantity::FiveCycleCover => {
            oracle::five_cycle_cover_with_limit(graph, common.limit(oracle::FIVE_CYCLE_LIMIT))
        }
        OracleQuantity::All => unreachable!("expanded by the caller"),
    }
}

fn witness_text(graph: &WeightedGraph, witness: &Witness) -> String {
    match witness {
        Witness::Cut(c) => format!("cut {}", c.bitstring()),
        Witness::Edges(ids) => {
            let pairs: Vec<String> = ids.iter().map(|&id| format!("{}-{}", graph.edge(id).u, graph.edge(id).v)).collect();
            format!("edges [{}]", pairs.join(", "))
        }
        Witness::None => "none found".to_string(),
    }
}

fn witness_json(graph: &WeightedGraph, witness: &Witness) -> Value {
    match witness {
        Witness::Cut(c) => json!({ "cut": c.bitstring() }),
        Witness::Edges(ids) => {
            json!({ "edges": ids.iter().map(|&id| [graph.edge(id).u, graph.edge(id).v]).collect::<Vec<_>>() })
        }
        Witness::None => Value::Null,
    }
}

fn cmd_oracle(graph: &WeightedGraph, quantity: OracleQuantity, common: &CommonArgs, out: &mut dyn Write) -> Result<i32> {
    let all = [OracleQuantity::Mac, OracleQuantity::RMax, OracleQuantity::MaxDfsWeight, OracleQuantity::FiveCycleCover];
    let chosen: Vec<OracleQuantity> = if quantity == OracleQuantity::All { all.to_vec() } else { vec![quantity] };
    for q in chosen {
        let name = q.to_possible_value().unwrap().get_name().to_string();
        let result = run_oracle(graph, q, common);
        // with several quantities a guard or precondition only skips that row
        let result = match result {
            Err(e) if quantity == OracleQuantity::All && e.is_input_error() => {
                match common.format {
                    Format::Table => writeln!(out, "{name:<18} skipped: {e}")?,
                    Format::JsonLines => writeln!(out, "{}", json!({ "quantity": name, "skipped": e.to_string() }))?,
                }
                continue;
            }
            other => other?,
        };
        match common.format {
            Format::Table => {
                let value = if result.value.is_nan() { "-".to_string() } else { format!("{:.6}", result.value) };
                writeln!(out, "{name:<18} {value:>14}  {}", witness_text(graph, &result.witness))?
            }
            Format::JsonLines => writeln!(
                out,
                "{}",
                json!({
                    "quantity": name,
                    "value": if result.value.is_nan() { Value::Null } else { json!(result.value) },
                    "exact": result.exact,
                    "witness": witness_json(graph, &result.witness),
                })
            )?,
        }
    }
    Ok(EXIT_OK)
}

/// Checks every deterministic bound on one graph; returns the number of
/// failed checks.
pub fn verify_graph(graph: &WeightedGraph, common: &CommonArgs, label: &str, out: &mut dyn Write) -> Result<usize> {
    let mac = oracle::exact_max_cut_with_limit(graph, common.limit(oracle::MAX_CUT_LIMIT))?.value;
    let options = SuiteOptions { roots: common.root_policy(), seed: common.seed, trials: common.trials, only: vec![] };
    let mut failures = 0;
    for entry in bound_suite(graph, &options) {
        let problem = match &entry.outcome {
            Ok(r) if r.mode == Mode::Deterministic => {
                if !r.cut_meets_bound(graph) {
                    Some(format!("cut {} below bound {}", r.cut.weight(), r.bound_value))
                } else if !at_least(graph, mac, r.bound_value, r.denominator) {
                    Some(format!("bound {} above mac {mac}", r.bound_value))
                } else {
                    None
                }
            }
            // Monte Carlo cuts are real cuts, so they still cannot beat mac
            Ok(r) => (r.cut.weight() > mac + bounds::tolerance(graph)).then(|| format!("cut {} above mac", r.cut.weight())),
            Err(e) if e.is_input_error() => None,
            Err(e) => Some(e.to_string()),
        };
        if let Some(p) = problem {
            failures += 1;
            match common.format {
                Format::Table => writeln!(out, "FAIL {label} {}: {p}", entry.name)?,
                Format::JsonLines => {
                    writeln!(out, "{}", json!({ "instance": label, "bound": entry.name, "status": "fail", "reason": p }))?
                }
            }
        }
    }
    match common.format {
        Format::Table => writeln!(
            out,
            "{} {label}: n={} m={} mac={:.6}",
            if failures == 0 { "pass" } else { "FAIL" },
            graph.vertex_count(),
            graph.edge_count(),
            mac
        )?,
        Format::JsonLines => writeln!(
            out,
            "{}",
            json!({ "instance": label, "status": if failures == 0 { "pass" } else { "fail" }, "mac": mac, "failures": failures })
        )?,
    }
    Ok(failures)
}

/// Random corpus cycling through every generator family.
pub fn random_instance(index: usize, max_n: usize, seed: u64) -> Result<WeightedGraph> {
    let s = seed.wrapping_add(index as u64);
    let span = max_n.max(4) - 3;
    let n = 4 + (s as usize * 7 + index) % span;
    let integer = WeightDistribution::Integer { lo: 0, hi: 10 };
    let real = WeightDistribution::Uniform { lo: 0.0, hi: 5.0 };
    match index % 6 {
        0 => crate::generate::random_triangle_free_subcubic(n, s, integer),
        1 => crate::generate::random_connected(n, 0.3, s, integer),
        2 => crate::generate::random_connected(n, 0.6, s, real),
        3 => crate::generate::random_triangle_free_subcubic(n, s, real),
        4 => match index / 6 % 4 {
            0 => crate::generate::cycle(n, 1.0 + (s % 3) as f64),
            1 => crate::generate::complete(n.min(8), 1.0),
            2 => Ok(crate::generate::petersen_c3(10.0, 1.0)),
            _ => Ok(crate::generate::petersen(1.0)),
        },
        _ => crate::generate::random_connected(n, 0.1, s, WeightDistribution::Unit),
    }
}

fn cmd_verify_random(count: usize, max_n: usize, common: &CommonArgs, out: &mut dyn Write) -> Result<i32> {
    let mut failed_instances = 0;
    for i in 0..count {
        let graph = random_instance(i, max_n, common.seed)?;
        if verify_graph(&graph, common, &format!("#{i}"), out)? > 0 {
            failed_instances += 1;
        }
    }
    match common.format {
        Format::Table => writeln!(out, "{} of {count} instances passed", count - failed_instances)?,
        Format::JsonLines => writeln!(out, "{}", json!({ "instances": count, "failed": failed_instances }))?,
    }
    Ok(if failed_instances == 0 { EXIT_OK } else { EXIT_INTERNAL })
}

fn cmd_conjecture(graph: &WeightedGraph, common: &CommonArgs, samples: usize, out: &mut dyn Write) -> Result<i32> {
    let config = ConjectureConfig {
        seed: common.seed,
        random_trees: samples,
        random_matchings: samples,
        max_cut_limit: common.limit(oracle::MAX_CUT_LIMIT),
    };
    let report = oracle::conjecture_report(graph, &config)?;
    match common.format {
        Format::JsonLines => writeln!(out, "{}", serde_json::to_string(&report).map_err(|e| Error::Io(e.to_string()))?)?,
        Format::Table => {
            let opt = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.6}"));
            writeln!(out, "mac                        {:.6}", report.mac)?;
            writeln!(out, "w(G)                       {:.6}", report.total_weight)?;
            writeln!(out, "mac / w                    {:.6}", report.mac_ratio)?;
            writeln!(
                out,
                "tree ratio (upper evidence) {}  over {} trees",
                opt(report.theta_ratio),
                report.theta_trees_sampled
            )?;
            writeln!(out, "matching ratio, greedy     {}", opt(report.c_ratio_greedy))?;
            writeln!(
                out,
                "matching ratio (upper evidence) {}  over {} matchings",
                opt(report.c_ratio),
                report.c_matchings_sampled
            )?;
            if let Some(found) = report.five_cycle_cover_found {
                writeln!(out, "five-cycle cover           {}", if found { "found" } else { "NONE" })?;
            }
            if report.flags.is_empty() {
                writeln!(out, "flags                      none")?;
            } else {
                writeln!(out, "flags                      {}", report.flags.join(", "))?;
            }
        }
    }
    Ok(EXIT_OK)
}
