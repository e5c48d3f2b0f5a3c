//! Simple undirected graphs, the edge-list text format, and the coverage
//! primitive shared by every solver.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ratio::Rational;
use crate::vertex_set::VertexSet;

/// Simple undirected graph on vertices `0..n`. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Normalized so that `u < v`, kept in insertion order.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Rejects self-loops, parallel edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            normalized.push((u, v));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    /// Errors unless every member of `set` is a vertex of this graph.
    pub fn check_subset(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(vertex) if vertex >= self.n => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Number of edges with at least one endpoint in `set`.
    pub fn coverage(&self, set: &VertexSet) -> Result<usize> {
        self.check_subset(set)?;
        Ok(self.coverage_unchecked(set))
    }

    pub(crate) fn coverage_unchecked(&self, set: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) || set.contains(v))
            .count()
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&w| set.contains(w))
            .count()
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .count()
    }

    /// The subgraph induced by `set`, relabeled to `0..|set|` in ascending
    /// id order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        self.check_subset(set)?;
        let original_ids = set.to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in original_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let graph = Graph::new(original_ids.len(), edges)?;
        Ok(InducedSubgraph {
            graph,
            original_ids,
        })
    }

    /// `m / n`, exactly.
    pub fn edge_density(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(self.m() as i64, self.n as i64))
    }

    /// Connected components, each listed in ascending id order; components
    /// are ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Chordality test: maximum cardinality search followed by a perfect
    /// elimination ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        // MCS visits vertices in reverse elimination order.
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered[v] = true;
            order.push(v);
            for &w in &self.adjacency[v] {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        order.reverse();
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for &v in &order {
            let later: Vec<usize> = self.adjacency[v]
                .iter()
                .copied()
                .filter(|&w| position[w] > position[v])
                .collect();
            let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
                continue;
            };
            if later
                .iter()
                .any(|&w| w != parent && !self.has_edge(parent, w))
            {
                return false;
            }
        }
        true
    }

    /// Serializes to the edge-list format: header `n m`, then one `u v` line
    /// per edge with `u < v`, edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").expect("writing to String");
        }
        out
    }
}

/// Result of [`Graph::induced_subgraph`]: vertex `i` of `graph` is
/// `original_ids[i]` in the parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original_ids: Vec<usize>,
}

/// Parses the edge-list format. The header is `n m`; exactly `m` edge lines
/// follow. Blank lines and lines starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::Parse {
                line,
                message: format!("expected two integers, found {:?}", l),
            });
        };
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("not a nonnegative integer: {s:?}"),
            })
        };
        Ok((num(a)?, num(b)?))
    };

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

/// A two-sided view of a bipartite graph with the degree data needed by the
/// degree-greedy solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitionView {
    pub x: VertexSet,
    pub y: VertexSet,
    /// X-vertices in nonincreasing degree order, ties by ascending id.
    pub x_by_degree: Vec<usize>,
    pub sorted_degrees_x: Vec<usize>,
    /// Minimum degree over X (0 when X is empty).
    pub min_degree_x: usize,
    /// Maximum degree over Y (0 when Y is empty).
    pub max_degree_y: usize,
}

impl BipartitionView {
    fn from_sides(g: &Graph, x: VertexSet) -> Self {
        let y = x.complement(g.n());
        let mut x_by_degree = x.to_vec();
        x_by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let sorted_degrees_x: Vec<usize> = x_by_degree.iter().map(|&v| g.degree(v)).collect();
        let min_degree_x = sorted_degrees_x.last().copied().unwrap_or(0);
        let max_degree_y = y.iter().map(|v| g.degree(v)).max().unwrap_or(0);
        Self {
            x,
            y,
            x_by_degree,
            sorted_degrees_x,
            min_degree_x,
            max_degree_y,
        }
    }

    /// Whether the side degrees satisfy `min deg(X) >= max deg(Y)`.
    pub fn degree_dominant(&self) -> bool {
        self.min_degree_x >= self.max_degree_y
    }
}

/// Validates `x_hint` as one side of a bipartition, or 2-colors the graph
/// when no hint is given. Without a hint, in every component the side
/// holding the component's smallest id becomes X. Returns `None` when the
/// graph is not bipartite.
pub fn bipartition(g: &Graph, x_hint: Option<&VertexSet>) -> Result<Option<BipartitionView>> {
    if let Some(x) = x_hint {
        g.check_subset(x)?;
        if let Some(&(u, v)) = g
            .edges()
            .iter()
            .find(|&&(u, v)| x.contains(u) == x.contains(v))
        {
            return Err(Error::InvalidBipartition(format!(
                "edge {u}-{v} does not cross the sides"
            )));
        }
        return Ok(Some(BipartitionView::from_sides(g, x.clone())));
    }

    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("queued vertices are colored");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let x = (0..g.n()).filter(|&v| color[v] == Some(true)).collect();
    Ok(Some(BipartitionView::from_sides(g, x)))
}
