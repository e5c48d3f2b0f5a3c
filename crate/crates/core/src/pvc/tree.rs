//! Partial vertex cover on forests by dynamic programming.
//!
//! Each tree is rooted at its smallest id. For a vertex `v` and selection
//! bit `b`, `table[b][c]` is the fewest selected vertices in the subtree of
//! `v` such that exactly `c` subtree edges are covered, with the last slot
//! meaning "at least `t`". Children are folded in one at a time with a
//! min-plus (knapsack) merge; the edge to a child counts as covered when
//! either endpoint is selected. Components are combined by the same merge
//! over their per-root curves. Bounding each table by the subtree edge count
//! keeps the total work at `O(n * min(n, t))` merges of size `O(min(n, t))`.
//!
//! Every intermediate table is kept so an optimal witness can be recovered
//! by walking the merges backwards.

use super::{check_target, Method, PvcResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const INF: u32 = u32::MAX;

type Table = [Vec<u32>; 2];

pub fn pvc_tree(g: &Graph, t: usize) -> Result<PvcResult> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    check_target(g, t)?;
    let dp = ForestDp::run(g, t);
    let witness = dp.witness();
    debug_assert_eq!(witness.len(), dp.optimum());
    Ok(PvcResult::new(g, witness, Method::TreeDp))
}

struct ForestDp {
    t: usize,
    children: Vec<Vec<usize>>,
    /// `history[v][i]` is `v`'s table before folding in its `i`-th child.
    history: Vec<Vec<Table>>,
    table: Vec<Table>,
    roots: Vec<usize>,
    /// Forest-level curves before folding in each root, then the final one.
    forest_history: Vec<Vec<u32>>,
}

/// Min-plus merge with saturation at `cap`.
fn merge(left: &[u32], right: &[u32], cap: usize) -> Vec<u32> {
    let len = (left.len() + right.len() - 1).min(cap + 1);
    let mut out = vec![INF; len];
    for (i, &a) in left.iter().enumerate() {
        if a == INF {
            continue;
        }
        for (j, &b) in right.iter().enumerate() {
            if b == INF {
                continue;
            }
            let slot = (i + j).min(cap);
            out[slot] = out[slot].min(a + b);
        }
    }
    out
}

/// `table` shifted by one covered edge when `covered`, else unchanged.
fn shifted(table: &[u32], covered: bool, cap: usize) -> Vec<u32> {
    if !covered {
        return table.to_vec();
    }
    let len = (table.len() + 1).min(cap + 1);
    let mut out = vec![INF; len];
    for (i, &a) in table.iter().enumerate() {
        let slot = (i + 1).min(cap);
        out[slot] = out[slot].min(a);
    }
    out
}

fn pointwise_min(a: &[u32], b: &[u32]) -> Vec<u32> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(INF);
            let y = b.get(i).copied().unwrap_or(INF);
            x.min(y)
        })
        .collect()
}

impl ForestDp {
    fn run(g: &Graph, t: usize) -> Self {
        let n = g.n();
        let mut children = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        let mut roots = Vec::new();
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            roots.push(root);
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                order.push(v);
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        children[v].push(w);
                        stack.push(w);
                    }
                }
            }
        }

        let mut dp = Self {
            t,
            children,
            history: vec![Vec::new(); n],
            table: vec![[Vec::new(), Vec::new()]; n],
            roots,
            forest_history: Vec::new(),
        };
        // Children precede parents in reverse DFS preorder.
        for &v in order.iter().rev() {
            dp.fold_children(v);
        }
        dp.fold_roots();
        dp
    }

    fn child_options(&self, child: usize, parent_selected: bool) -> Vec<u32> {
        let [off, on] = &self.table[child];
        pointwise_min(
            &shifted(off, parent_selected, self.t),
            &shifted(on, true, self.t),
        )
    }

    fn fold_children(&mut self, v: usize) {
        let mut current: Table = [vec![0], vec![1]];
        let mut history = Vec::with_capacity(self.children[v].len());
        for &c in &self.children[v] {
            let next = [
                merge(&current[0], &self.child_options(c, false), self.t),
                merge(&current[1], &self.child_options(c, true), self.t),
            ];
            history.push(std::mem::replace(&mut current, next));
        }
        self.history[v] = history;
        self.table[v] = current;
    }

    fn fold_roots(&mut self) {
        let mut curve = vec![0];
        for &r in &self.roots {
            let [off, on] = &self.table[r];
            let next = merge(&curve, &pointwise_min(off, on), self.t);
            self.forest_history
                .push(std::mem::replace(&mut curve, next));
        }
        self.forest_history.push(curve);
    }

    fn final_curve(&self) -> &[u32] {
        self.forest_history
            .last()
            .expect("forest curve is recorded")
    }

    fn optimum(&self) -> usize {
        self.final_curve()[self.t] as usize
    }

    /// Finds a slot `i` of `before`, a child bit and a child slot `s` with
    /// `before[i] + child[bit][s] == value` and
    /// `min(i + s + edge(bit), t) == slot`.
    fn split(
        &self,
        before: &[u32],
        child: &Table,
        edge: impl Fn(usize) -> usize,
        slot: usize,
        value: u32,
    ) -> (usize, usize, usize) {
        for (i, &a) in before.iter().enumerate() {
            if a == INF || a > value {
                continue;
            }
            for bit in 0..2 {
                for (s, &b) in child[bit].iter().enumerate() {
                    if b != INF && a + b == value && (i + s + edge(bit)).min(self.t) == slot {
                        return (i, bit, s);
                    }
                }
            }
        }
        unreachable!("merged value has a decomposition")
    }

    fn witness(&self) -> VertexSet {
        let mut witness = VertexSet::new();
        let mut pending = Vec::new();

        let mut slot = self.t;
        for (idx, &r) in self.roots.iter().enumerate().rev() {
            let before = &self.forest_history[idx];
            let value = self.forest_history[idx + 1][slot];
            let (i, bit, s) = self.split(before, &self.table[r], |_| 0, slot, value);
            pending.push((r, bit, s));
            slot = i;
        }
        debug_assert_eq!(slot, 0);

        while let Some((v, bit, mut slot)) = pending.pop() {
            if bit == 1 {
                witness.insert(v);
            }
            let mut value = self.table[v][bit][slot];
            for (idx, &c) in self.children[v].iter().enumerate().rev() {
                let before = &self.history[v][idx][bit];
                let edge = |child_bit: usize| usize::from(bit == 1 || child_bit == 1);
                let (i, child_bit, s) = self.split(before, &self.table[c], edge, slot, value);
                pending.push((c, child_bit, s));
                slot = i;
                value = before[i];
            }
            debug_assert_eq!((slot, value), (0, bit as u32));
        }
        witness
    }
}
