//! Exhaustive small-graph batteries: the two gadget equivalences and the
//! partial-cover identities for the smallest monopolies.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{labeled_graphs, random_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monopoly::{
    is_dynamic_monopoly, is_monopoly, monopoly_witness_tau, sdyn, sdyn_via_subgraph, smon,
};
use crate::ratio::{self, Rational};
use crate::reductions::{build_gadget, preserves_structure, verify_lemma1, verify_lemma2};

/// Largest order for which every labeled graph is enumerated.
pub const LABELED_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Suite {
    Lemma1,
    Lemma2,
    Theorems,
}

#[derive(Clone, Debug)]
pub struct BatteryConfig {
    /// Largest source order tested.
    pub size_bound: usize,
    /// Orders up to this bound are enumerated exhaustively; larger ones
    /// (theorem battery only) are sampled.
    pub exhaustive_bound: usize,
    /// Random graphs per sampled order.
    pub samples: usize,
    pub seed: u64,
    pub rhos: Vec<Rational>,
}

impl BatteryConfig {
    pub fn new(size_bound: usize) -> Self {
        Self {
            size_bound,
            exhaustive_bound: 5,
            samples: 100,
            seed: 0x5eed,
            rhos: vec![
                Rational::new(1, 3),
                Rational::new(1, 2),
                Rational::new(2, 3),
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Outcome {
    /// The source graph as `n:u-v,u-v,...`.
    pub graph: String,
    pub params: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BatteryReport {
    pub suite: Suite,
    pub graphs: usize,
    pub instances: usize,
    pub counterexamples: usize,
    pub flagged: usize,
    pub outcomes: Vec<Outcome>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

pub fn graph_code(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:{}", g.n(), edges.join(","))
}

fn exhaustive_corpus(low: usize, high: usize) -> Vec<Graph> {
    (low..=high.min(LABELED_LIMIT))
        .flat_map(labeled_graphs)
        .collect()
}

/// Labeled graphs up to the exhaustive bound, then `samples` random graphs
/// for each larger order up to the size bound.
pub fn mixed_corpus(cfg: &BatteryConfig, low: usize) -> Vec<Graph> {
    let exhaustive = cfg.exhaustive_bound.min(cfg.size_bound);
    let mut graphs = exhaustive_corpus(low, exhaustive);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in (exhaustive + 1).max(low)..=cfg.size_bound {
        graphs.extend((0..cfg.samples).map(|_| random_graph(&mut rng, n, 1, 2)));
    }
    graphs
}

fn assemble(
    suite: Suite,
    graphs: usize,
    per_graph: Vec<Result<Vec<Outcome>>>,
) -> Result<BatteryReport> {
    let mut outcomes = Vec::new();
    for chunk in per_graph {
        outcomes.extend(chunk?);
    }
    Ok(BatteryReport {
        suite,
        graphs,
        instances: outcomes.len(),
        counterexamples: outcomes.iter().filter(|o| !o.holds).count(),
        flagged: outcomes.iter().filter(|o| o.note.is_some()).count(),
        outcomes,
    })
}

/// Every labeled graph with `n <= size_bound`, every `k <= n`,
/// every `t <= m`.
pub fn lemma1_battery(cfg: &BatteryConfig) -> Result<BatteryReport> {
    let graphs = exhaustive_corpus(0, cfg.size_bound);
    let results: Vec<_> = graphs
        .par_iter()
        .map(|g| {
            let mut out = Vec::new();
            for k in 0..=g.n() {
                for t in 0..=g.m() {
                    let eq = verify_lemma1(g, k, t, cfg.size_bound)?;
                    out.push(Outcome {
                        graph: graph_code(g),
                        params: format!("k={k} t={t}"),
                        holds: eq.holds(),
                        note: None,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    assemble(Suite::Lemma1, graphs.len(), results)
}

/// Every labeled graph with `1 <= n <= size_bound`, every `k <= n`,
/// `t <= m`, and each configured `rho`. Besides the equivalence, checks
/// `s >= 1`, the vertex and edge counts, and structure preservation.
/// Instances with `k = n` are flagged.
pub fn lemma2_battery(cfg: &BatteryConfig) -> Result<BatteryReport> {
    let graphs = exhaustive_corpus(1, cfg.size_bound);
    let results: Vec<_> = graphs
        .par_iter()
        .map(|g| {
            let (n, m) = (g.n(), g.m());
            let mut out = Vec::new();
            for &rho in &cfg.rhos {
                for k in 0..=n {
                    for t in 0..=m {
                        let outcome = verify_lemma2(g, k, t, rho, cfg.size_bound)?;
                        let counts = outcome.s >= 1
                            && outcome.edges == m + 3 * n + outcome.r + outcome.s + 1
                            && outcome.vertices == 4 * n + outcome.r + outcome.s + 1;
                        let structure = preserves_structure(g, &build_gadget(g, k, t, rho)?.h);
                        out.push(Outcome {
                            graph: graph_code(g),
                            params: format!(
                                "k={k} t={t} rho={} r={} s={}",
                                ratio::format_rational(rho),
                                outcome.r,
                                outcome.s
                            ),
                            holds: outcome.equivalence.holds() && counts && structure,
                            note: outcome.budget_is_order.then(|| "k = n".to_string()),
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect();
    assemble(Suite::Lemma2, graphs.len(), results)
}

/// Every `p/q` with `1 <= p <= 2m` and `q` in `{1, 2, 3}`, deduplicated.
pub fn threshold_grid(g: &Graph) -> Vec<Rational> {
    let set: BTreeSet<Rational> = (1..=2 * g.m() as i64)
        .flat_map(|p| (1..=3).map(move |q| Rational::new(p, q)))
        .collect();
    set.into_iter().collect()
}

/// Smallest `|M|` whose maximal static-monopoly thresholds reach each total,
/// indexed by total (`0..=2m`). Exhaustive over subsets.
fn smon_by_total(g: &Graph) -> Vec<usize> {
    let mut best = vec![usize::MAX; 2 * g.m() + 1];
    for mask in 0u64..1 << g.n() {
        let set = crate::VertexSet::from_mask(mask);
        let total = monopoly_witness_tau(g, &set)
            .expect("mask within range")
            .total();
        let slot = &mut best[total];
        *slot = (*slot).min(mask.count_ones() as usize);
    }
    // "total >= c" is a suffix minimum.
    for c in (0..best.len().saturating_sub(1)).rev() {
        best[c] = best[c].min(best[c + 1]);
    }
    best
}

/// Checks one graph against both identities for every threshold in the
/// grid, and that infeasible thresholds are rejected.
pub fn check_theorems_on(g: &Graph, oracle_guard: usize) -> Result<Vec<Outcome>> {
    let by_total = smon_by_total(g);
    let mut out = Vec::new();
    let n = ratio::int(g.n());
    for t in threshold_grid(g) {
        let params = format!("t={}", ratio::format_rational(t));
        let feasible = n * t <= ratio::int(2 * g.m());
        let holds = if feasible {
            let demand = ratio::ceil_nonneg(n * t);
            let s = smon(g, t)?;
            let smon_ok = s.size == by_total[demand]
                && is_monopoly(g, &s.witness_tau, &s.monopoly)?
                && s.witness_tau.total() >= demand;
            let d = sdyn(g, t)?;
            let (oracle_size, _) = sdyn_via_subgraph(g, t, oracle_guard)?;
            let sdyn_ok = d.size == oracle_size
                && is_dynamic_monopoly(g, &d.witness_tau, &d.seed)?
                && d.witness_tau.total() >= demand;
            smon_ok && sdyn_ok
        } else {
            matches!(smon(g, t), Err(Error::Infeasible { .. }))
                && matches!(sdyn(g, t), Err(Error::Infeasible { .. }))
        };
        out.push(Outcome {
            graph: graph_code(g),
            params,
            holds,
            note: (!feasible).then(|| "infeasible".to_string()),
        });
    }
    Ok(out)
}

pub fn theorems_battery(cfg: &BatteryConfig) -> Result<BatteryReport> {
    let graphs = mixed_corpus(cfg, 1);
    let guard = cfg.size_bound.max(crate::monopoly::SUBSET_ORACLE_GUARD);
    let results: Vec<_> = graphs
        .par_iter()
        .map(|g| check_theorems_on(g, guard))
        .collect();
    assemble(Suite::Theorems, graphs.len(), results)
}

pub fn run_suite(suite: Suite, cfg: &BatteryConfig) -> Result<BatteryReport> {
    match suite {
        Suite::Lemma1 => lemma1_battery(cfg),
        Suite::Lemma2 => lemma2_battery(cfg),
        Suite::Theorems => theorems_battery(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{complete, cycle};

    #[test]
    fn grid_is_deduplicated() {
        let grid = threshold_grid(&crate::corpus::path(2));
        // p in 1..=2, q in 1..=3: 1, 1/2, 1/3, 2, 2/3 (2/2 repeats 1)
        assert_eq!(grid.len(), 5);
    }

    #[test]
    fn small_batteries_pass() {
        let cfg = BatteryConfig::new(3);
        for suite in [Suite::Lemma1, Suite::Lemma2, Suite::Theorems] {
            let report = run_suite(suite, &cfg).unwrap();
            assert!(
                report.passed(),
                "{suite:?}: {:?}",
                report.outcomes.iter().find(|o| !o.holds)
            );
            assert!(report.instances > 0);
        }
    }

    #[test]
    fn zero_bound_is_vacuous() {
        let cfg = BatteryConfig::new(0);
        let lemma2 = lemma2_battery(&cfg).unwrap();
        assert_eq!((lemma2.instances, lemma2.passed()), (0, true));
        let theorems = theorems_battery(&cfg).unwrap();
        assert_eq!((theorems.instances, theorems.passed()), (0, true));
        // The order-0 graph still yields the trivial <G, 0, 0> instance.
        assert!(lemma1_battery(&cfg).unwrap().passed());
    }

    #[test]
    fn theorem_checks_on_named_graphs() {
        for g in [cycle(4), complete(4), cycle(5)] {
            assert!(check_theorems_on(&g, 14).unwrap().iter().all(|o| o.holds));
        }
    }

    #[test]
    fn graph_codes() {
        assert_eq!(graph_code(&cycle(3)), "3:0-1,1-2,0-2");
    }
}
