//! Minimum t-partial vertex cover: the smallest vertex set touching at least
//! `t` edges.
//!
//! Four solvers share the [`PvcResult`] contract:
//!
//! * [`pvc_exact`], branch-and-bound for general graphs at desk scale;
//! * [`pvc_tree`], a polynomial dynamic program for forests;
//! * [`pvc_degree_greedy`], optimal on bipartite graphs whose X side
//!   dominates in degree;
//! * [`pvc_greedy_upper`], a max-residual-degree heuristic with no
//!   optimality claim.

mod exact;
mod tree;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, BipartitionView, Graph};
use crate::ratio::{self, Rational};
use crate::vertex_set::VertexSet;

pub use exact::{pvc_exact, pvc_within_budget};
pub use tree::pvc_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Method {
    Exact,
    TreeDp,
    DegreeGreedy,
    Heuristic,
}

impl Method {
    /// Whether results from this method are guaranteed minimum.
    pub fn is_optimal(self) -> bool {
        !matches!(self, Method::Heuristic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PvcResult {
    pub size: usize,
    pub witness: VertexSet,
    pub achieved_coverage: usize,
    pub method: Method,
}

impl PvcResult {
    pub(crate) fn new(g: &Graph, witness: VertexSet, method: Method) -> Self {
        let achieved_coverage = g.coverage_unchecked(&witness);
        Self {
            size: witness.len(),
            witness,
            achieved_coverage,
            method,
        }
    }
}

/// A PVCB instance `<G, k, t>`: is there a set of at most `k` vertices
/// covering at least `t` edges?
#[derive(Clone, Debug)]
pub struct PvcbInstance {
    pub graph: Graph,
    pub k: usize,
    pub t: usize,
}

impl PvcbInstance {
    pub fn new(graph: Graph, k: usize, t: usize) -> Result<Self> {
        check_target(&graph, t)?;
        if k > graph.n() {
            return Err(Error::BudgetExceedsOrder { k, n: graph.n() });
        }
        Ok(Self { graph, k, t })
    }
}

pub(crate) fn check_target(g: &Graph, t: usize) -> Result<()> {
    if t > g.m() {
        Err(Error::TargetExceedsEdges {
            target: t,
            m: g.m(),
        })
    } else {
        Ok(())
    }
}

/// Answers a PVCB instance. "At most k" and "exactly k" agree because
/// coverage is monotone and `k <= n`.
pub fn pvc_decide(inst: &PvcbInstance) -> Result<bool> {
    Ok(pvc_within_budget(&inst.graph, inst.t, inst.k)?.is_some())
}

/// Least integer `>= rho * m`.
pub fn rho_target(g: &Graph, rho: Rational) -> Result<usize> {
    ratio::require_open_unit(rho)?;
    Ok(ratio::ceil_nonneg(rho * ratio::int(g.m())))
}

/// Answers PVC(rho): can at most `l` vertices cover at least `rho * |E|`
/// edges?
pub fn pvc_rho_decide(h: &Graph, l: usize, rho: Rational) -> Result<bool> {
    let target = rho_target(h, rho)?;
    Ok(pvc_within_budget(h, target, l.min(h.n()))?.is_some())
}

/// Repeatedly takes the vertex covering the most still-uncovered edges
/// (smallest id on ties) until `t` edges are covered.
pub fn pvc_greedy_upper(g: &Graph, t: usize) -> Result<PvcResult> {
    check_target(g, t)?;
    let mut residual = g.degrees();
    let mut chosen = VertexSet::new();
    let mut covered = 0;
    while covered < t {
        let (best, gain) = residual
            .iter()
            .enumerate()
            .filter(|(v, _)| !chosen.contains(*v))
            .max_by_key(|&(v, &d)| (d, std::cmp::Reverse(v)))
            .map(|(v, &d)| (v, d))
            .expect("t <= m leaves a vertex with positive residual degree");
        debug_assert!(gain > 0);
        chosen.insert(best);
        covered += gain;
        residual[best] = 0;
        for &w in g.neighbors(best) {
            if !chosen.contains(w) {
                residual[w] -= 1;
            }
        }
    }
    Ok(PvcResult::new(g, chosen, Method::Heuristic))
}

/// Takes X-vertices in nonincreasing degree order until their degree sum
/// reaches `t`. Optimal when every X-vertex has degree at least the maximum
/// Y degree; that hypothesis is checked.
pub fn pvc_degree_greedy(view: &BipartitionView, g: &Graph, t: usize) -> Result<PvcResult> {
    check_target(g, t)?;
    let view = bipartition(g, Some(&view.x))?.expect("a validated hint always yields a view");
    if !view.degree_dominant() {
        return Err(Error::DegreeHypothesis {
            min_x: view.min_degree_x,
            max_y: view.max_degree_y,
        });
    }
    let mut witness = VertexSet::new();
    let mut sum = 0;
    for (&v, &d) in view.x_by_degree.iter().zip(&view.sorted_degrees_x) {
        if sum >= t {
            break;
        }
        witness.insert(v);
        sum += d;
    }
    // X is independent, so the degree sum is the coverage.
    debug_assert!(sum >= t);
    Ok(PvcResult::new(g, witness, Method::DegreeGreedy))
}
