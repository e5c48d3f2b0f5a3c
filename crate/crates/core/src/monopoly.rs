//! Threshold assignments, the deterministic spread process, and the
//! smallest static and dynamic monopolies under an average-threshold
//! constraint.
//!
//! Both minimum quantities reduce to partial vertex cover:
//!
//! * a set `M` admits thresholds of total `2 * coverage(M)` under which it
//!   is a static monopoly, and no larger total, so the smallest static
//!   monopoly for average `t` is the smallest set covering `ceil(n t / 2)`
//!   edges;
//! * a set `D` admits thresholds of total `m + coverage(D)` under which it
//!   is a dynamic monopoly, so the smallest dynamic monopoly is the
//!   smallest set covering `ceil(n t) - m` edges.
//!
//! Every result carries the witness thresholds, and [`sdyn_via_subgraph`]
//! recomputes the dynamic quantity independently by maximizing a sparse
//! induced subgraph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pvc::{pvc_exact, pvc_within_budget, PvcResult};
use crate::ratio::{self, Rational};
use crate::vertex_set::VertexSet;

/// Default order bound for the exhaustive subgraph oracle.
pub const SUBSET_ORACLE_GUARD: usize = 14;

/// Per-vertex thresholds with `0 <= tau(v) <= deg(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdAssignment {
    values: Vec<usize>,
    total: usize,
    #[serde(serialize_with = "serialize_rational")]
    average: Rational,
}

fn serialize_rational<S: serde::Serializer>(
    x: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio::format_rational(*x))
}

impl ThresholdAssignment {
    pub fn new(g: &Graph, values: Vec<usize>) -> Result<Self> {
        if values.len() != g.n() {
            return Err(Error::ThresholdCount {
                got: values.len(),
                n: g.n(),
            });
        }
        for (vertex, &threshold) in values.iter().enumerate() {
            let degree = g.degree(vertex);
            if threshold > degree {
                return Err(Error::ThresholdExceedsDegree {
                    vertex,
                    threshold,
                    degree,
                });
            }
        }
        let total = values.iter().sum();
        let average = if g.n() == 0 {
            Rational::from_integer(0)
        } else {
            Rational::new(total as i64, g.n() as i64)
        };
        Ok(Self {
            values,
            total,
            average,
        })
    }

    pub fn zeros(g: &Graph) -> Self {
        Self::new(g, vec![0; g.n()]).expect("zero thresholds are valid")
    }

    pub fn degrees(g: &Graph) -> Self {
        Self::new(g, g.degrees()).expect("degree thresholds are valid")
    }

    /// Parses one integer per line; line `i` is the threshold of vertex `i`.
    /// Blank lines and `#` comments are skipped.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let values = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(line, l)| {
                l.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    message: format!("not a nonnegative integer: {l:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, values)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn get(&self, v: usize) -> usize {
        self.values[v]
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn average(&self) -> Rational {
        self.average
    }

    fn check_for(&self, g: &Graph) -> Result<()> {
        Self::new(g, self.values.clone()).map(|_| ())
    }

    /// Rescales to exactly `total` while keeping `seed` a monopoly (static or
    /// dynamic) whenever it was one: the total is raised only on seed
    /// vertices, whose thresholds never matter, and lowered first on seed
    /// vertices and then off-seed in ascending id order, which only makes
    /// activation easier.
    pub fn with_total(&self, g: &Graph, seed: &VertexSet, total: usize) -> Result<Self> {
        self.check_for(g)?;
        let mut values = self.values.clone();
        let mut current = self.total;
        let seed_first: Vec<usize> = seed
            .iter()
            .chain((0..g.n()).filter(|&v| !seed.contains(v)))
            .collect();
        if current < total {
            for v in seed.iter() {
                let room = (g.degree(v) - values[v]).min(total - current);
                values[v] += room;
                current += room;
            }
        } else {
            for &v in &seed_first {
                let cut = values[v].min(current - total);
                values[v] -= cut;
                current -= cut;
            }
        }
        if current != total {
            return Err(Error::Infeasible {
                t: Rational::new(total as i64, g.n().max(1) as i64),
                demand: ratio::int(total),
                capacity: 2 * g.m(),
            });
        }
        Self::new(g, values)
    }
}

/// The round partition `D_0, D_1, ..., D_k` of the spread process.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpreadTrace {
    pub layers: Vec<VertexSet>,
    pub activated_all: bool,
}

impl SpreadTrace {
    pub fn rounds(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn activated(&self) -> VertexSet {
        self.layers
            .iter()
            .fold(VertexSet::new(), |acc, layer| acc.union(layer))
    }
}

/// Runs the spread process from `seed`: in every round, all inactive
/// vertices with at least `tau(v)` active neighbors activate together.
/// Stops at the first round that activates nobody.
pub fn simulate_spread(
    g: &Graph,
    tau: &ThresholdAssignment,
    seed: &VertexSet,
) -> Result<SpreadTrace> {
    tau.check_for(g)?;
    g.check_subset(seed)?;
    let n = g.n();
    let mut active = vec![false; n];
    let mut active_neighbors = vec![0usize; n];
    let mut activated = 0;
    let mut layers = Vec::new();
    let mut layer = seed.clone();
    loop {
        for v in layer.iter() {
            active[v] = true;
            activated += 1;
            for &w in g.neighbors(v) {
                active_neighbors[w] += 1;
            }
        }
        layers.push(layer);
        let next: VertexSet = (0..n)
            .filter(|&v| !active[v] && active_neighbors[v] >= tau.get(v))
            .collect();
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    Ok(SpreadTrace {
        layers,
        activated_all: activated == n,
    })
}

pub fn is_dynamic_monopoly(g: &Graph, tau: &ThresholdAssignment, seed: &VertexSet) -> Result<bool> {
    Ok(simulate_spread(g, tau, seed)?.activated_all)
}

/// Whether every vertex outside `set` has at least its threshold many
/// neighbors inside it.
pub fn is_monopoly(g: &Graph, tau: &ThresholdAssignment, set: &VertexSet) -> Result<bool> {
    tau.check_for(g)?;
    g.check_subset(set)?;
    Ok((0..g.n())
        .filter(|&v| !set.contains(v))
        .all(|v| g.degree_into(v, set) >= tau.get(v)))
}

/// The largest thresholds under which `set` is a static monopoly:
/// `deg_M(v)` off the set, `deg(v)` on it. Its total is
/// `2 * coverage(set)`.
pub fn monopoly_witness_tau(g: &Graph, set: &VertexSet) -> Result<ThresholdAssignment> {
    g.check_subset(set)?;
    let values = (0..g.n())
        .map(|v| {
            if set.contains(v) {
                g.degree(v)
            } else {
                g.degree_into(v, set)
            }
        })
        .collect();
    ThresholdAssignment::new(g, values)
}

/// Activation order of the non-seed vertices in [`dynamo_witness_tau_ordered`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ActivationOrder {
    #[default]
    Ascending,
    Descending,
}

/// Thresholds under which `seed` is a dynamic monopoly, with total
/// `m + coverage(seed)`. Non-seed vertices activate one per round in
/// ascending id order.
pub fn dynamo_witness_tau(g: &Graph, seed: &VertexSet) -> Result<ThresholdAssignment> {
    dynamo_witness_tau_ordered(g, seed, ActivationOrder::Ascending)
}

/// Each non-seed vertex, taken in `order`, gets as threshold the number of
/// its neighbors that are seeds or come earlier; seed vertices get their
/// degree. The total does not depend on the order: edges meeting the seed
/// count twice, the rest once.
pub fn dynamo_witness_tau_ordered(
    g: &Graph,
    seed: &VertexSet,
    order: ActivationOrder,
) -> Result<ThresholdAssignment> {
    g.check_subset(seed)?;
    let mut rest: Vec<usize> = (0..g.n()).filter(|&v| !seed.contains(v)).collect();
    if order == ActivationOrder::Descending {
        rest.reverse();
    }
    let mut values = g.degrees();
    let mut earlier = seed.clone();
    for v in rest {
        values[v] = g.degree_into(v, &earlier);
        earlier.insert(v);
    }
    ThresholdAssignment::new(g, values)
}

fn require_positive(t: Rational) -> Result<()> {
    if t > Rational::from_integer(0) {
        Ok(())
    } else {
        Err(Error::NonPositiveThreshold(t))
    }
}

/// `ceil(n t)` after checking `0 < t` and `n t <= 2m`.
fn threshold_demand(g: &Graph, t: Rational) -> Result<usize> {
    require_positive(t)?;
    let demand = ratio::int(g.n()) * t;
    if demand > ratio::int(2 * g.m()) {
        return Err(Error::Infeasible {
            t,
            demand,
            capacity: 2 * g.m(),
        });
    }
    Ok(ratio::ceil_nonneg(demand))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SmonResult {
    pub size: usize,
    pub monopoly: VertexSet,
    pub witness_tau: ThresholdAssignment,
    /// Edges the monopoly must cover: `ceil(n t / 2)`.
    pub coverage_target: usize,
}

/// Smallest static monopoly over all thresholds with average at least `t`.
pub fn smon(g: &Graph, t: Rational) -> Result<SmonResult> {
    smon_with(g, t, pvc_exact)
}

/// [`smon`] with a caller-chosen partial cover solver.
pub fn smon_with(
    g: &Graph,
    t: Rational,
    solver: impl FnOnce(&Graph, usize) -> Result<PvcResult>,
) -> Result<SmonResult> {
    let demand = threshold_demand(g, t)?;
    let coverage_target = ratio::ceil_nonneg(Rational::new(demand as i64, 2));
    let cover = solver(g, coverage_target)?;
    let witness_tau = monopoly_witness_tau(g, &cover.witness)?;
    debug_assert!(witness_tau.total() >= demand);
    Ok(SmonResult {
        size: cover.size,
        monopoly: cover.witness,
        witness_tau,
        coverage_target,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SdynResult {
    pub size: usize,
    pub seed: VertexSet,
    pub witness_tau: ThresholdAssignment,
    /// A largest vertex set inducing at most `2m - ceil(n t)` edges; here
    /// the complement of the seed.
    pub sparse_subgraph_witness: Option<VertexSet>,
    /// Edges the seed must cover: `max(0, ceil(n t) - m)`.
    pub coverage_target: usize,
}

/// Smallest dynamic monopoly over all thresholds with average at least `t`.
pub fn sdyn(g: &Graph, t: Rational) -> Result<SdynResult> {
    sdyn_with(g, t, pvc_exact)
}

/// [`sdyn`] with a caller-chosen partial cover solver.
pub fn sdyn_with(
    g: &Graph,
    t: Rational,
    solver: impl FnOnce(&Graph, usize) -> Result<PvcResult>,
) -> Result<SdynResult> {
    let demand = threshold_demand(g, t)?;
    let coverage_target = demand.saturating_sub(g.m());
    let cover = solver(g, coverage_target)?;
    let witness_tau = dynamo_witness_tau(g, &cover.witness)?;
    debug_assert!(witness_tau.total() >= demand);
    Ok(SdynResult {
        size: cover.size,
        sparse_subgraph_witness: Some(cover.witness.complement(g.n())),
        seed: cover.witness,
        witness_tau,
        coverage_target,
    })
}

/// Independent route to the smallest dynamic monopoly: `n` minus the order
/// of a largest induced subgraph with at most `2m - ceil(n t)` edges, found
/// by exhaustive enumeration. Refuses graphs above `guard` vertices.
pub fn sdyn_via_subgraph(g: &Graph, t: Rational, guard: usize) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > guard.min(63) {
        return Err(Error::SizeGuard {
            n,
            bound: guard.min(63),
        });
    }
    let demand = threshold_demand(g, t)?;
    let budget = 2 * g.m() - demand;
    let adjacency: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let mut best: Option<u64> = None;
    for mask in 0u64..1 << n {
        let size = mask.count_ones();
        if best.is_some_and(|b| b.count_ones() >= size) {
            continue;
        }
        let mut twice_edges = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice_edges += (adjacency[v] & mask).count_ones() as usize;
        }
        if twice_edges / 2 <= budget {
            best = Some(mask);
        }
    }
    let best = best.expect("the empty set always fits");
    Ok((n - best.count_ones() as usize, VertexSet::from_mask(best)))
}

/// Thresholds realizing the problem's fixed total `ceil(k m)` (that is,
/// `n` times `k` times the edge density, rounded up).
fn decision_total(g: &Graph, k_factor: Rational) -> Result<usize> {
    let density = g.edge_density()?;
    Ok(ratio::ceil_nonneg(ratio::int(g.n()) * k_factor * density))
}

/// A static monopoly of size at most `d` together with thresholds whose
/// total is exactly `ceil(n k eps)`, if one exists. Requires `0 < k < 2`.
pub fn smon_certificate(
    g: &Graph,
    d: usize,
    k_factor: Rational,
) -> Result<Option<(VertexSet, ThresholdAssignment)>> {
    ratio::require_open_interval(k_factor, 0, 2)?;
    let total = decision_total(g, k_factor)?;
    let target = total.div_ceil(2);
    let Some(cover) = pvc_within_budget(g, target, d.min(g.n()))? else {
        return Ok(None);
    };
    let tau = monopoly_witness_tau(g, &cover.witness)?.with_total(g, &cover.witness, total)?;
    Ok(Some((cover.witness, tau)))
}

pub fn smon_decide(g: &Graph, d: usize, k_factor: Rational) -> Result<bool> {
    Ok(smon_certificate(g, d, k_factor)?.is_some())
}

/// A dynamic monopoly of size at most `d` together with thresholds whose
/// total is exactly `ceil(n k eps)`, if one exists. Requires `1 < k < 2`.
pub fn sdyn_certificate(
    g: &Graph,
    d: usize,
    k_factor: Rational,
) -> Result<Option<(VertexSet, ThresholdAssignment)>> {
    ratio::require_open_interval(k_factor, 1, 2)?;
    let total = decision_total(g, k_factor)?;
    let target = total.saturating_sub(g.m());
    let Some(cover) = pvc_within_budget(g, target, d.min(g.n()))? else {
        return Ok(None);
    };
    let tau = dynamo_witness_tau(g, &cover.witness)?.with_total(g, &cover.witness, total)?;
    Ok(Some((cover.witness, tau)))
}

pub fn sdyn_decide(g: &Graph, d: usize, k_factor: Rational) -> Result<bool> {
    Ok(sdyn_certificate(g, d, k_factor)?.is_some())
}
