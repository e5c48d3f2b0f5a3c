use std::cmp::Reverse;

use super::{check_target, pvc_greedy_upper, Method, PvcResult};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Minimum-cardinality set covering at least `t` edges.
///
/// Iterative deepening over the budget, from the degree-sum lower bound up
/// to one below the greedy upper bound; each budget is a bounded
/// branch-and-bound ([`pvc_within_budget`]). If every smaller budget fails
/// the greedy set is itself optimal.
pub fn pvc_exact(g: &Graph, t: usize) -> Result<PvcResult> {
    check_target(g, t)?;
    let upper = pvc_greedy_upper(g, t)?;
    let mut degrees = g.degrees();
    degrees.sort_unstable_by_key(|&d| Reverse(d));
    let mut lower = 0;
    let mut sum = 0;
    while sum < t {
        sum += degrees[lower];
        lower += 1;
    }
    let mut search = Search::new(g);
    for budget in lower..upper.size {
        if let Some(witness) = search.run(t, budget) {
            return Ok(PvcResult::new(g, witness, Method::Exact));
        }
    }
    Ok(PvcResult {
        method: Method::Exact,
        ..upper
    })
}

/// A set of at most `budget` vertices covering at least `t` edges, if one
/// exists. The witness may be smaller than the budget but is not
/// necessarily minimum.
pub fn pvc_within_budget(g: &Graph, t: usize, budget: usize) -> Result<Option<PvcResult>> {
    check_target(g, t)?;
    Ok(Search::new(g)
        .run(t, budget)
        .map(|w| PvcResult::new(g, w, Method::Exact)))
}

/// Depth-first include/exclude search. At every node the available vertex
/// with the largest residual degree is branched on; a node is cut when the
/// `budget` largest residual degrees cannot reach the residual target.
struct Search<'g> {
    g: &'g Graph,
    residual: Vec<usize>,
    chosen: Vec<bool>,
    excluded: Vec<bool>,
    stack: Vec<usize>,
    scratch: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Self {
            g,
            residual: g.degrees(),
            chosen: vec![false; n],
            excluded: vec![false; n],
            stack: Vec::new(),
            scratch: Vec::with_capacity(n),
        }
    }

    fn run(&mut self, t: usize, budget: usize) -> Option<VertexSet> {
        debug_assert!(self.stack.is_empty());
        if self.dfs(t, budget) {
            let witness = self.stack.iter().copied().collect();
            for v in std::mem::take(&mut self.stack) {
                self.unselect(v);
            }
            self.excluded.fill(false);
            Some(witness)
        } else {
            None
        }
    }

    fn dfs(&mut self, need: usize, budget: usize) -> bool {
        if need == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        self.scratch.clear();
        self.scratch.extend(
            (0..self.g.n())
                .filter(|&v| !self.chosen[v] && !self.excluded[v] && self.residual[v] > 0),
        );
        let residual = &self.residual;
        self.scratch
            .sort_unstable_by_key(|&v| (Reverse(residual[v]), v));
        let reachable: usize = self.scratch.iter().take(budget).map(|&v| residual[v]).sum();
        if reachable < need {
            return false;
        }
        let pivot = self.scratch[0];

        let gain = self.residual[pivot];
        self.select(pivot);
        self.stack.push(pivot);
        if self.dfs(need.saturating_sub(gain), budget - 1) {
            return true;
        }
        self.stack.pop();
        self.unselect(pivot);

        self.excluded[pivot] = true;
        let found = self.dfs(need, budget);
        self.excluded[pivot] = false;
        found
    }

    fn select(&mut self, v: usize) {
        self.chosen[v] = true;
        for &w in self.g.neighbors(v) {
            if !self.chosen[w] {
                self.residual[w] -= 1;
            }
        }
    }

    fn unselect(&mut self, v: usize) {
        self.chosen[v] = false;
        for &w in self.g.neighbors(v) {
            if !self.chosen[w] {
                self.residual[w] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{complete, complete_bipartite, cycle, path, star};

    #[test]
    fn exact_examples() {
        let c4 = cycle(4);
        assert_eq!(pvc_exact(&c4, 2).unwrap().size, 1);
        let r = pvc_exact(&c4, 4).unwrap();
        assert_eq!(r.size, 2);
        assert!(matches!(r.witness.to_vec().as_slice(), [0, 2] | [1, 3]));
        let zero = pvc_exact(&complete(5), 0).unwrap();
        assert_eq!(
            (zero.size, zero.witness, zero.achieved_coverage),
            (0, VertexSet::new(), 0)
        );
        assert_eq!(pvc_exact(&complete_bipartite(2, 3), 4).unwrap().size, 2);
    }

    #[test]
    fn exact_rejects_excess_target() {
        assert!(pvc_exact(&path(3), 3).is_err());
    }

    #[test]
    fn witness_coverage_is_reported() {
        for t in 0..=6 {
            let r = pvc_exact(&complete(4), t).unwrap();
            assert_eq!(
                r.achieved_coverage,
                complete(4).coverage(&r.witness).unwrap()
            );
            assert!(r.achieved_coverage >= t);
            assert_eq!(r.size, r.witness.len());
        }
    }

    #[test]
    fn budget_search_is_reusable() {
        let g = star(6);
        let mut search = Search::new(&g);
        assert!(search.run(6, 0).is_none());
        assert_eq!(search.run(6, 1).unwrap().to_vec(), vec![0]);
        assert_eq!(search.run(3, 3).unwrap().to_vec(), vec![0]);
        assert_eq!(search.residual, g.degrees());
    }

    #[test]
    fn beats_greedy_somewhere() {
        let gap = crate::corpus::labeled_graphs(6).any(|g| {
            (0..=g.m())
                .any(|t| pvc_exact(&g, t).unwrap().size < pvc_greedy_upper(&g, t).unwrap().size)
        });
        assert!(gap);
    }
}
