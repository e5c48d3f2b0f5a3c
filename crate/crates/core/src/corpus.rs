//! Named small graphs and the enumeration / sampling helpers used by the
//! verification batteries.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("complete bipartite graph is simple")
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
}

/// Center 0 with `legs` paths of `length` edges each.
pub fn spider(legs: usize, length: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..legs {
        let mut prev = 0;
        for _ in 0..length {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges).expect("spider is simple")
}

/// All unordered pairs of `0..n` in lexicographic order; bit `i` of a
/// labeled-graph code selects pair `i`.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled graph on `n` vertices, one per subset of the pair list.
/// Practical for `n <= 6`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() < 32, "too many labeled graphs to enumerate");
    (0u32..1 << pairs.len()).map(move |code| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pair subsets are simple")
    })
}

/// Erdős–Rényi style sample: each pair present independently with
/// probability `p_num / p_den`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p_num: u32, p_den: u32) -> Graph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_ratio(p_num, p_den))
        .collect();
    Graph::new(n, edges).expect("pair subsets are simple")
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return path(2);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(n, &code)
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree.
pub fn tree_from_prufer(n: usize, code: &[usize]) -> Graph {
    assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &c in code {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Every labeled tree on `n` vertices (`n^(n-2)` of them).
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    match n {
        0 | 1 => return vec![Graph::empty(n)],
        2 => return vec![path(2)],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code_id| {
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code_id % n;
                    code_id /= n;
                    d
                })
                .collect();
            tree_from_prufer(n, &code)
        })
        .collect()
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown by attaching a leaf to every tree of order `n - 1` and keeping
/// the first tree seen for each canonical encoding.
pub fn unlabeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![path(n)];
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for tree in unlabeled_trees(n - 1) {
        for v in 0..n - 1 {
            let edges = tree.edges().iter().copied().chain([(v, n - 1)]);
            let grown = Graph::new(n, edges).expect("a new leaf keeps the tree simple");
            if seen.insert(tree_code(&grown)) {
                out.push(grown);
            }
        }
    }
    out
}

/// Isomorphism-invariant encoding of a tree: the smallest parenthesised
/// rooted encoding over its (one or two) centers.
fn tree_code(tree: &Graph) -> String {
    let n = tree.n();
    let mut degree = tree.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &u in tree.neighbors(leaf) {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|center| rooted_code(tree, center, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(tree: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(tree, u, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Random bipartite graph with sides `0..a` and `a..a+b` whose X side
/// dominates: every X-vertex has degree at least every Y-vertex degree.
/// Built by giving every X-vertex `d` distinct Y-neighbors, then discarding
/// the sample if some Y-vertex exceeds the minimum X degree.
pub fn random_degree_dominant_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize) -> Option<Graph> {
    if a == 0 || b == 0 {
        return None;
    }
    let mut edges = Vec::new();
    let ys: Vec<usize> = (a..a + b).collect();
    let min_d = rng.gen_range(1..=b);
    for x in 0..a {
        let d = rng.gen_range(min_d..=b);
        for &y in ys.choose_multiple(rng, d) {
            edges.push((x, y));
        }
    }
    let g = Graph::new(a + b, edges).ok()?;
    let min_x = (0..a).map(|v| g.degree(v)).min()?;
    let max_y = (a..a + b).map(|v| g.degree(v)).max()?;
    (min_x >= max_y).then_some(g)
}
