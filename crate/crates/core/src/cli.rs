//! Command-line front end. Every command produces a [`RunReport`] whose
//! `result` payload is deterministic for fixed inputs; only `timingMs`
//! varies between runs. Witnesses are re-checked against the definitions
//! before they are reported.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::graph::{bipartition, parse_graph, Graph};
use crate::monopoly::{
    dynamo_witness_tau_ordered, is_dynamic_monopoly, is_monopoly, sdyn, sdyn_via_subgraph,
    simulate_spread, smon, ActivationOrder, ThresholdAssignment, SUBSET_ORACLE_GUARD,
};
use crate::pvc::{pvc_degree_greedy, pvc_exact, pvc_greedy_upper, pvc_tree, PvcResult};
use crate::ratio::{self, parse_rational, Rational};
use crate::reductions::{build_gadget, GadgetInstance, GadgetSidecar};
use crate::verify::{run_suite, BatteryConfig, Suite};
use crate::vertex_set::VertexSet;

/// Default order bound for the exact partial cover solver.
pub const EXACT_GUARD: usize = 30;

pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pvcmon",
    version,
    about = "Partial vertex covers and smallest monopolies"
)]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for explicitness).
    #[arg(long, global = true)]
    pub json: bool,

    /// Override the order bound of exhaustive or exact solvers.
    #[arg(long, global = true, value_name = "N")]
    pub guard: Option<usize>,

    /// Activation order of non-seed vertices in dynamic monopoly witnesses.
    #[arg(long, global = true, value_enum, default_value_t = SeedOrder::Asc)]
    pub seed_order: SeedOrder,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeedOrder {
    Asc,
    Desc,
}

impl From<SeedOrder> for ActivationOrder {
    fn from(order: SeedOrder) -> Self {
        match order {
            SeedOrder::Asc => ActivationOrder::Ascending,
            SeedOrder::Desc => ActivationOrder::Descending,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Auto,
    Exact,
    Tree,
    Greedy,
    DegreeGreedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemma1,
    Lemma2,
    Theorems,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum set covering at least T edges.
    Pvc {
        graph: PathBuf,
        #[arg(short, long, allow_negative_numbers = true)]
        t: i64,
        #[arg(long, value_enum, default_value_t = Solver::Auto)]
        solver: Solver,
        /// X side for the degree-greedy solver, e.g. "0,2,4".
        #[arg(long, value_name = "IDS")]
        x: Option<String>,
    },
    /// Smallest static monopoly over thresholds with average at least T.
    Smon(RationalArgs),
    /// Smallest dynamic monopoly over thresholds with average at least T.
    Sdyn {
        #[command(flatten)]
        args: RationalArgs,
        /// Also run the exhaustive induced-subgraph oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the spread process and print every round.
    Simulate {
        graph: PathBuf,
        /// Threshold file: one integer per line.
        #[arg(long)]
        tau: PathBuf,
        /// Seed vertices, e.g. "1,3". Empty for no seed.
        #[arg(long, default_value = "")]
        seed: String,
    },
    /// Build the star/path gadget for <G, k, t> and fraction RHO, or with
    /// --load re-validate a saved gadget (GRAPH is then its edge list).
    Reduce {
        graph: PathBuf,
        #[arg(short, long, required_unless_present = "load")]
        k: Option<usize>,
        #[arg(short, long, required_unless_present = "load")]
        t: Option<usize>,
        #[arg(long, required_unless_present = "load")]
        rho: Option<String>,
        /// Sidecar of a previously written gadget.
        #[arg(long, conflicts_with_all = ["k", "t", "rho", "out", "sidecar"])]
        load: Option<PathBuf>,
        /// Write the gadget's edge list here (and its sidecar next to it).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sidecar path; defaults to OUT with a .json extension.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Run the exhaustive verification batteries.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest source order; defaults to 5 (lemma1), 4 (lemma2), 7 (theorems).
        #[arg(long)]
        size_bound: Option<usize>,
        /// Random graphs per order above the exhaustive range (theorems).
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        rng_seed: u64,
        /// Only list failing or flagged instances.
        #[arg(long)]
        counterexamples_only: bool,
    },
}

#[derive(Debug, Args)]
pub struct RationalArgs {
    pub graph: PathBuf,
    /// Average threshold as an integer or p/q.
    #[arg(short, long)]
    pub t: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    pub result: Value,
    pub timing_ms: u128,
}

/// A failed command with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    /// Report to print despite failing (counterexamples found).
    pub report: Option<Box<RunReport>>,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TargetExceedsEdges { .. }
            | Error::Infeasible { .. }
            | Error::BudgetExceedsOrder { .. }
            | Error::GadgetConstruction(_) => EXIT_INFEASIBLE,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
            report: None,
        }
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: message.into(),
        report: None,
    }
}

fn unverified(what: &str) -> CliError {
    CliError {
        code: EXIT_COUNTEREXAMPLE,
        message: format!("internal error: {what} witness failed re-verification"),
        report: None,
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(parse_graph(&read(path)?)?)
}

fn parse_ids(text: &str) -> Result<VertexSet, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| input_error(format!("bad vertex id {s:?}")))
        })
        .collect()
}

fn guard_for(cli: &Cli, default: usize) -> usize {
    match cli.guard {
        Some(g) if g > default => {
            eprintln!(
                "warning: size guard raised from {default} to {g}; exhaustive solvers may be slow"
            );
            g
        }
        Some(g) => g,
        None => default,
    }
}

fn check_guard(g: &Graph, bound: usize) -> Result<(), CliError> {
    if g.n() > bound {
        Err(Error::SizeGuard { n: g.n(), bound }.into())
    } else {
        Ok(())
    }
}

fn pvc_payload(g: &Graph, t: usize, result: &PvcResult) -> Result<Value, CliError> {
    if g.coverage(&result.witness)? < t || result.witness.len() != result.size {
        return Err(unverified("partial cover"));
    }
    Ok(json!({
        "target": t,
        "size": result.size,
        "witness": result.witness,
        "achievedCoverage": result.achieved_coverage,
        "method": result.method,
        "upper_bound": !result.method.is_optimal(),
    }))
}

fn cmd_pvc(
    cli: &Cli,
    path: &Path,
    t: i64,
    solver: Solver,
    x: Option<&str>,
) -> Result<(InputDigest, Value), CliError> {
    let g = load_graph(path)?;
    let digest = InputDigest { n: g.n(), m: g.m() };
    let t = usize::try_from(t)
        .map_err(|_| input_error(format!("coverage target must be nonnegative, got {t}")))?;
    let guard = guard_for(cli, EXACT_GUARD);
    let hint = x.map(parse_ids).transpose()?;
    let result = match solver {
        Solver::Exact => {
            check_guard(&g, guard)?;
            pvc_exact(&g, t)?
        }
        Solver::Tree => pvc_tree(&g, t)?,
        Solver::Greedy => pvc_greedy_upper(&g, t)?,
        Solver::DegreeGreedy => {
            let view = bipartition(&g, hint.as_ref())?
                .ok_or_else(|| input_error("graph is not bipartite"))?;
            pvc_degree_greedy(&view, &g, t)?
        }
        Solver::Auto => auto_pvc(&g, t, hint.as_ref(), guard)?,
    };
    Ok((digest, pvc_payload(&g, t, &result)?))
}

/// Tree DP for forests, degree greedy when either side of a bipartition
/// dominates, exact search under the guard, otherwise the heuristic.
fn auto_pvc(
    g: &Graph,
    t: usize,
    hint: Option<&VertexSet>,
    guard: usize,
) -> Result<PvcResult, CliError> {
    if g.is_forest() {
        return Ok(pvc_tree(g, t)?);
    }
    if let Some(view) = bipartition(g, hint)? {
        let swapped = bipartition(g, Some(&view.y))?.expect("the other side is a valid hint");
        for side in [view, swapped] {
            if side.degree_dominant() {
                return Ok(pvc_degree_greedy(&side, g, t)?);
            }
        }
    }
    if g.n() <= guard {
        Ok(pvc_exact(g, t)?)
    } else {
        Ok(pvc_greedy_upper(g, t)?)
    }
}

fn threshold_fields(g: &Graph, t: Rational) -> Value {
    json!({
        "t": ratio::format_rational(t),
        "demand": ratio::ceil_nonneg(ratio::int(g.n()) * t),
    })
}

fn cmd_smon(cli: &Cli, args: &RationalArgs) -> Result<(InputDigest, Value), CliError> {
    let g = load_graph(&args.graph)?;
    let t = parse_rational(&args.t)?;
    check_guard(&g, guard_for(cli, EXACT_GUARD))?;
    let res = smon(&g, t)?;
    let demand = ratio::ceil_nonneg(ratio::int(g.n()) * t);
    let verified =
        is_monopoly(&g, &res.witness_tau, &res.monopoly)? && res.witness_tau.total() >= demand;
    if !verified {
        return Err(unverified("static monopoly"));
    }
    let mut payload = threshold_fields(&g, t);
    payload["coverageTarget"] = json!(res.coverage_target);
    payload["size"] = json!(res.size);
    payload["monopoly"] = json!(res.monopoly);
    payload["witnessTau"] = json!(res.witness_tau);
    payload["verified"] = json!(verified);
    Ok((InputDigest { n: g.n(), m: g.m() }, payload))
}

fn cmd_sdyn(
    cli: &Cli,
    args: &RationalArgs,
    oracle: bool,
) -> Result<(InputDigest, Value), CliError> {
    let g = load_graph(&args.graph)?;
    let t = parse_rational(&args.t)?;
    check_guard(&g, guard_for(cli, EXACT_GUARD))?;
    let res = sdyn(&g, t)?;
    let tau = dynamo_witness_tau_ordered(&g, &res.seed, cli.seed_order.into())?;
    let demand = ratio::ceil_nonneg(ratio::int(g.n()) * t);
    let verified = is_dynamic_monopoly(&g, &tau, &res.seed)? && tau.total() >= demand;
    if !verified {
        return Err(unverified("dynamic monopoly"));
    }
    let mut payload = threshold_fields(&g, t);
    payload["coverageTarget"] = json!(res.coverage_target);
    payload["size"] = json!(res.size);
    payload["seed"] = json!(res.seed);
    payload["witnessTau"] = json!(tau);
    payload["sparseSubgraphWitness"] = json!(res.sparse_subgraph_witness);
    payload["verified"] = json!(verified);
    if oracle {
        let (size, sparse) = sdyn_via_subgraph(&g, t, guard_for(cli, SUBSET_ORACLE_GUARD))?;
        payload["oracle"] = json!({
            "size": size,
            "sparseSubgraph": sparse,
            "agrees": size == res.size,
        });
    }
    Ok((InputDigest { n: g.n(), m: g.m() }, payload))
}

fn cmd_simulate(
    path: &Path,
    tau_path: &Path,
    seed: &str,
) -> Result<(InputDigest, Value), CliError> {
    let g = load_graph(path)?;
    let tau = ThresholdAssignment::parse(&g, &read(tau_path)?)?;
    let seed = parse_ids(seed)?;
    let trace = simulate_spread(&g, &tau, &seed)?;
    let payload = json!({
        "tau": tau,
        "seed": seed,
        "rounds": trace.rounds(),
        "layers": trace.layers,
        "activatedAll": trace.activated_all,
    });
    Ok((InputDigest { n: g.n(), m: g.m() }, payload))
}

struct ReduceArgs<'a> {
    path: &'a Path,
    k: Option<usize>,
    t: Option<usize>,
    rho: Option<&'a str>,
    load: Option<&'a Path>,
    out: Option<&'a Path>,
    sidecar: Option<&'a Path>,
}

fn cmd_reduce(args: ReduceArgs<'_>) -> Result<(InputDigest, Value), CliError> {
    let g = load_graph(args.path)?;
    let (gadget, digest) = match args.load {
        Some(load) => {
            let meta: GadgetSidecar = serde_json::from_str(&read(load)?)
                .map_err(|e| input_error(format!("{}: {e}", load.display())))?;
            let digest = InputDigest {
                n: meta.source_n,
                m: meta.source_m,
            };
            let gadget = GadgetInstance::from_parts(g, &meta)
                .map_err(|e| input_error(format!("{}: {e}", load.display())))?;
            (gadget, digest)
        }
        None => {
            let missing = || input_error("k, t and rho are required");
            let (k, t) = (args.k.ok_or_else(missing)?, args.t.ok_or_else(missing)?);
            let rho = parse_rational(args.rho.ok_or_else(missing)?)?;
            let digest = InputDigest { n: g.n(), m: g.m() };
            (build_gadget(&g, k, t, rho)?, digest)
        }
    };
    let (out, sidecar) = (args.out, args.sidecar);
    let meta = gadget.to_sidecar();
    let mut payload = json!({
        "rho": meta.rho,
        "r": meta.r,
        "s": meta.s,
        "vertices": meta.vertices,
        "edges": meta.edges,
        "starCenter": meta.star_center,
        "pathEnd": meta.path_end,
        "pendantAnchor": meta.pendant_anchor,
    });
    let edge_list = gadget.h.to_edge_list();
    match out {
        Some(out) => {
            let sidecar = sidecar
                .map(Path::to_path_buf)
                .unwrap_or_else(|| out.with_extension("json"));
            let write = |p: &Path, text: &str| {
                fs::write(p, text).map_err(|e| input_error(format!("{}: {e}", p.display())))
            };
            write(out, &edge_list)?;
            write(&sidecar, &sidecar_json(&meta))?;
            payload["edgeListFile"] = json!(out.display().to_string());
            payload["sidecarFile"] = json!(sidecar.display().to_string());
        }
        None if args.load.is_some() => {}
        None => {
            payload["edgeList"] = json!(edge_list);
            payload["sidecar"] = json!(meta);
        }
    }
    payload["invariantsHold"] = json!(gadget.check_invariants().is_ok());
    Ok((digest, payload))
}

/// Pretty JSON with a trailing newline; byte-stable for equal inputs.
pub fn sidecar_json(meta: &crate::reductions::GadgetSidecar) -> String {
    let mut text = serde_json::to_string_pretty(meta).expect("sidecar serializes");
    text.push('\n');
    text
}

fn cmd_verify(
    cli: &Cli,
    suite: SuiteArg,
    size_bound: Option<usize>,
    samples: usize,
    rng_seed: u64,
    counterexamples_only: bool,
) -> Result<Value, CliError> {
    let suites: &[(Suite, usize)] = match suite {
        SuiteArg::Lemma1 => &[(Suite::Lemma1, 5)],
        SuiteArg::Lemma2 => &[(Suite::Lemma2, 4)],
        SuiteArg::Theorems => &[(Suite::Theorems, 7)],
        SuiteArg::All => &[(Suite::Lemma1, 5), (Suite::Lemma2, 4), (Suite::Theorems, 7)],
    };
    let mut reports = Vec::new();
    let mut passed = true;
    for &(suite, default_bound) in suites {
        let mut cfg = BatteryConfig::new(size_bound.unwrap_or(default_bound));
        cfg.samples = samples;
        cfg.seed = rng_seed;
        if let Some(g) = cli.guard {
            cfg.exhaustive_bound = g.min(crate::verify::LABELED_LIMIT);
        }
        let mut report = run_suite(suite, &cfg)?;
        passed &= report.passed();
        if counterexamples_only {
            report.outcomes.retain(|o| !o.holds || o.note.is_some());
        }
        reports.push(report);
    }
    Ok(json!({ "passed": passed, "suites": reports }))
}

/// Runs one command. On a counterexample the report is attached to the
/// error so it can still be printed.
pub fn run(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let (command, input, result) = match &cli.command {
        Command::Pvc {
            graph,
            t,
            solver,
            x,
        } => {
            let (d, v) = cmd_pvc(cli, graph, *t, *solver, x.as_deref())?;
            ("pvc", Some(d), v)
        }
        Command::Smon(args) => {
            let (d, v) = cmd_smon(cli, args)?;
            ("smon", Some(d), v)
        }
        Command::Sdyn { args, oracle } => {
            let (d, v) = cmd_sdyn(cli, args, *oracle)?;
            ("sdyn", Some(d), v)
        }
        Command::Simulate { graph, tau, seed } => {
            let (d, v) = cmd_simulate(graph, tau, seed)?;
            ("simulate", Some(d), v)
        }
        Command::Reduce {
            graph,
            k,
            t,
            rho,
            load,
            out,
            sidecar,
        } => {
            let (d, v) = cmd_reduce(ReduceArgs {
                path: graph,
                k: *k,
                t: *t,
                rho: rho.as_deref(),
                load: load.as_deref(),
                out: out.as_deref(),
                sidecar: sidecar.as_deref(),
            })?;
            ("reduce", Some(d), v)
        }
        Command::Verify {
            suite,
            size_bound,
            samples,
            rng_seed,
            counterexamples_only,
        } => {
            let v = cmd_verify(
                cli,
                *suite,
                *size_bound,
                *samples,
                *rng_seed,
                *counterexamples_only,
            )?;
            ("verify", None, v)
        }
    };
    let report = RunReport {
        command,
        input,
        result,
        timing_ms: start.elapsed().as_millis(),
    };
    if report.result.get("passed") == Some(&Value::Bool(false)) {
        return Err(CliError {
            code: EXIT_COUNTEREXAMPLE,
            message: "counterexample found".into(),
            report: Some(Box::new(report)),
        });
    }
    Ok(report)
}
