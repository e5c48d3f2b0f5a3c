//! The two gadget constructions behind the hardness of covering a fixed
//! fraction of the edges, plus exact checks that they preserve yes/no
//! answers on small inputs.
//!
//! * [`pendant_triple_augment`] hangs three pendant vertices off every
//!   vertex, so `<G, k, t>` and `<G', k, t + 3k>` answer alike.
//! * [`build_gadget`] attaches a large star `K_{1,r}` and a path `P_s` to
//!   `G'`, calibrated so that `<G', k, t + 3k>` is a yes-instance exactly
//!   when `k + 1` vertices cover a `rho` fraction of the edges of `H`.
//!
//! Vertex layout in `H`: the original vertices keep ids `0..n`, pendants of
//! vertex `i` are `n + 3i .. n + 3i + 3`, then the star center, its `r`
//! leaves, and finally the path starting at its attached end `u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};
use crate::pvc::{pvc_decide, pvc_rho_decide, PvcbInstance};
use crate::ratio::{self, Rational};

/// Default order bound on the source graph for the verifiers.
pub const VERIFY_GUARD: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Role {
    Original,
    Pendant,
    StarCenter,
    StarLeaf,
    PathVertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmented {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

/// Attaches three new degree-one neighbors to every vertex.
pub fn pendant_triple_augment(g: &Graph) -> Augmented {
    let n = g.n();
    let pendant_edges = (0..n).flat_map(|v| (0..3).map(move |j| (v, n + 3 * v + j)));
    let edges = g.edges().iter().copied().chain(pendant_edges);
    let graph = Graph::new(4 * n, edges).expect("pendants are fresh vertices");
    let roles = (0..4 * n)
        .map(|v| if v < n { Role::Original } else { Role::Pendant })
        .collect();
    Augmented { graph, roles }
}

/// The star/path gadget graph `H` with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub h: Graph,
    pub rho: Rational,
    pub r: usize,
    pub s: usize,
    /// `v`, the center of the star.
    pub star_center: usize,
    /// `u`, the path end joined to the star center.
    pub path_end: usize,
    /// `w`, the pendant of `G'` joined to the star center.
    pub pendant_anchor: usize,
    pub roles: Vec<Role>,
    pub source_n: usize,
    pub source_m: usize,
    pub k: usize,
    pub t: usize,
}

/// `ceil((rho / (1 - rho)) * (n(n-1)/2 + 3n)) + n + 3`.
pub fn star_size(n: usize, rho: Rational) -> Result<usize> {
    ratio::require_open_unit(rho)?;
    let one = Rational::from_integer(1);
    let scaled = rho / (one - rho) * ratio::int(n * n.saturating_sub(1) / 2 + 3 * n);
    Ok(ratio::ceil_to_i64(scaled) as usize + n + 3)
}

/// `floor((t + 3k + (1 - rho) r + 1 - rho (m + 3n)) / rho)`; may be
/// nonpositive for parameters outside the reduction's range.
pub fn path_length(n: usize, m: usize, k: usize, t: usize, r: usize, rho: Rational) -> Result<i64> {
    ratio::require_open_unit(rho)?;
    let one = Rational::from_integer(1);
    let numerator =
        ratio::int(t + 3 * k + 1) + (one - rho) * ratio::int(r) - rho * ratio::int(m + 3 * n);
    Ok(ratio::floor_to_i64(numerator / rho))
}

/// Builds `H` from `G`, a budget `k <= n`, a target `t` and `0 < rho < 1`.
/// The pendant joined to the star center is the lowest-id pendant.
pub fn build_gadget(g: &Graph, k: usize, t: usize, rho: Rational) -> Result<GadgetInstance> {
    ratio::require_open_unit(rho)?;
    let (n, m) = (g.n(), g.m());
    if k > n {
        return Err(Error::BudgetExceedsOrder { k, n });
    }
    if n == 0 {
        return Err(Error::GadgetConstruction(
            "the augmented graph has no degree-one vertex to anchor".into(),
        ));
    }
    let r = star_size(n, rho)?;
    let s = path_length(n, m, k, t, r, rho)?;
    if s < 1 {
        return Err(Error::GadgetConstruction(format!(
            "path length s = {s} < 1 (n={n}, m={m}, k={k}, t={t}, rho={}, r={r})",
            ratio::format_rational(rho)
        )));
    }
    let s = s as usize;

    let Augmented {
        graph: gp,
        mut roles,
    } = pendant_triple_augment(g);
    let star_center = 4 * n;
    let path_end = star_center + r + 1;
    let pendant_anchor = n;
    debug_assert_eq!(gp.degree(pendant_anchor), 1);

    let star = (1..=r).map(|i| (star_center, star_center + i));
    let path = (1..s).map(|i| (path_end + i - 1, path_end + i));
    let joins = [(star_center, path_end), (star_center, pendant_anchor)];
    let edges = gp
        .edges()
        .iter()
        .copied()
        .chain(star)
        .chain(path)
        .chain(joins);
    let h = Graph::new(4 * n + r + 1 + s, edges)?;

    roles.push(Role::StarCenter);
    roles.extend(std::iter::repeat_n(Role::StarLeaf, r));
    roles.extend(std::iter::repeat_n(Role::PathVertex, s));

    let gadget = GadgetInstance {
        h,
        rho,
        r,
        s,
        star_center,
        path_end,
        pendant_anchor,
        roles,
        source_n: n,
        source_m: m,
        k,
        t,
    };
    gadget.check_invariants()?;
    Ok(gadget)
}

impl GadgetInstance {
    /// Re-derives `r` and `s` from the recorded source parameters and checks
    /// the counting identities and the layout of the distinguished vertices.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |what: String| Err(Error::GadgetConstruction(what));
        let (n, m) = (self.source_n, self.source_m);
        let r = star_size(n, self.rho)?;
        let s = path_length(n, m, self.k, self.t, r, self.rho)?;
        if self.r != r || self.s as i64 != s {
            return fail(format!(
                "parameters (r, s) = ({}, {}) but formulas give ({r}, {s})",
                self.r, self.s
            ));
        }
        if self.r < n + 3 || self.s < 1 {
            return fail(format!("r = {} < n + 3 or s = {} < 1", self.r, self.s));
        }
        if self.h.n() != 4 * n + self.r + 1 + self.s {
            return fail(format!("|V(H)| = {} != 4n + r + s + 1", self.h.n()));
        }
        if self.h.m() != m + 3 * n + self.r + self.s + 1 {
            return fail(format!("|E(H)| = {} != m + 3n + r + s + 1", self.h.m()));
        }
        if self.h.degree(self.star_center) != self.r + 2 {
            return fail(format!(
                "star center degree {} != r + 2",
                self.h.degree(self.star_center)
            ));
        }
        let expect = [
            (self.star_center, Role::StarCenter),
            (self.path_end, Role::PathVertex),
            (self.pendant_anchor, Role::Pendant),
        ];
        if self.roles.len() != self.h.n()
            || expect
                .iter()
                .any(|&(v, role)| self.roles.get(v) != Some(&role))
        {
            return fail("role map disagrees with the vertex layout".into());
        }
        // w was a leaf of G' before joining v.
        if self.h.degree(self.pendant_anchor) != 2
            || !self.h.has_edge(self.star_center, self.pendant_anchor)
        {
            return fail("pendant anchor is not a former leaf joined to the star center".into());
        }
        // u is a path end: its only path neighbor is the next path vertex.
        let u_path_degree = self
            .h
            .neighbors(self.path_end)
            .iter()
            .filter(|&&x| self.roles[x] == Role::PathVertex)
            .count();
        if u_path_degree != usize::from(self.s > 1) {
            return fail("path end is not a degree-one end of the path".into());
        }
        Ok(())
    }

    pub fn to_sidecar(&self) -> GadgetSidecar {
        GadgetSidecar {
            rho: ratio::format_rational(self.rho),
            r: self.r,
            s: self.s,
            k: self.k,
            t: self.t,
            source_n: self.source_n,
            source_m: self.source_m,
            star_center: self.star_center,
            path_end: self.path_end,
            pendant_anchor: self.pendant_anchor,
            vertices: self.h.n(),
            edges: self.h.m(),
            roles: self.roles.clone(),
        }
    }

    /// Rebuilds an instance from a serialized graph and its sidecar and
    /// validates every invariant.
    pub fn from_parts(h: Graph, sidecar: &GadgetSidecar) -> Result<Self> {
        let rho = ratio::parse_rational(&sidecar.rho)?;
        let gadget = Self {
            h,
            rho,
            r: sidecar.r,
            s: sidecar.s,
            star_center: sidecar.star_center,
            path_end: sidecar.path_end,
            pendant_anchor: sidecar.pendant_anchor,
            roles: sidecar.roles.clone(),
            source_n: sidecar.source_n,
            source_m: sidecar.source_m,
            k: sidecar.k,
            t: sidecar.t,
        };
        gadget.check_invariants()?;
        Ok(gadget)
    }
}

/// JSON companion to a gadget's edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetSidecar {
    pub rho: String,
    pub r: usize,
    pub s: usize,
    pub k: usize,
    pub t: usize,
    pub source_n: usize,
    pub source_m: usize,
    pub star_center: usize,
    pub path_end: usize,
    pub pendant_anchor: usize,
    pub vertices: usize,
    pub edges: usize,
    pub roles: Vec<Role>,
}

/// Yes/no answers on both sides of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Equivalence {
    pub source: bool,
    pub target: bool,
}

impl Equivalence {
    pub fn holds(self) -> bool {
        self.source == self.target
    }
}

fn guard(g: &Graph, bound: usize) -> Result<()> {
    if g.n() > bound {
        Err(Error::SizeGuard { n: g.n(), bound })
    } else {
        Ok(())
    }
}

/// Compares `<G, k, t>` with `<G', k, t + 3k>` by exact solving.
pub fn verify_lemma1(g: &Graph, k: usize, t: usize, bound: usize) -> Result<Equivalence> {
    guard(g, bound)?;
    let source = pvc_decide(&PvcbInstance::new(g.clone(), k, t)?)?;
    let augmented = pendant_triple_augment(g).graph;
    let target = pvc_decide(&PvcbInstance::new(augmented, k, t + 3 * k)?)?;
    Ok(Equivalence { source, target })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma2Outcome {
    pub equivalence: Equivalence,
    pub r: usize,
    pub s: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Budget equal to the order: the statement allows it, the argument for
    /// the converse direction assumes `k < n`.
    pub budget_is_order: bool,
}

/// Compares `<G', k, t + 3k>` with PVC(rho) on `<H, k + 1>` by exact
/// solving.
pub fn verify_lemma2(
    g: &Graph,
    k: usize,
    t: usize,
    rho: Rational,
    bound: usize,
) -> Result<Lemma2Outcome> {
    guard(g, bound)?;
    let augmented = pendant_triple_augment(g).graph;
    let source = pvc_decide(&PvcbInstance::new(augmented, k, t + 3 * k)?)?;
    let gadget = build_gadget(g, k, t, rho)?;
    let target = pvc_rho_decide(&gadget.h, k + 1, rho)?;
    Ok(Lemma2Outcome {
        equivalence: Equivalence { source, target },
        r: gadget.r,
        s: gadget.s,
        vertices: gadget.h.n(),
        edges: gadget.h.m(),
        budget_is_order: k == g.n(),
    })
}

/// The full chain `G -> G' -> H`, comparing `<G, k, t>` directly with
/// PVC(rho) on `<H, k + 1>`.
pub fn reduction_chain(
    g: &Graph,
    k: usize,
    t: usize,
    rho: Rational,
    bound: usize,
) -> Result<(GadgetInstance, Equivalence)> {
    guard(g, bound)?;
    let source = pvc_decide(&PvcbInstance::new(g.clone(), k, t)?)?;
    let gadget = build_gadget(g, k, t, rho)?;
    let target = pvc_rho_decide(&gadget.h, k + 1, rho)?;
    Ok((gadget, Equivalence { source, target }))
}

/// Whether bipartiteness and chordality of `source` carry over to
/// `derived`.
pub fn preserves_structure(source: &Graph, derived: &Graph) -> bool {
    let bipartite = |g: &Graph| bipartition(g, None).ok().flatten().is_some();
    (!bipartite(source) || bipartite(derived)) && (!source.is_chordal() || derived.is_chordal())
}
