//! Brute-force oracles shared by the integration tests. They work on raw
//! edge lists and bit masks and call nothing from the library beyond the
//! graph accessors, so they stay independent of the solvers under test.

#![allow(dead_code)]

use partial_cover::Graph;

/// Edges with at least one endpoint in `mask`.
pub fn covered(g: &Graph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        .count()
}

/// Edges with both endpoints in `mask`.
pub fn inside(g: &Graph, mask: u32) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count()
}

fn all_masks(n: usize) -> impl Iterator<Item = u32> {
    assert!(n < 32);
    0u32..1 << n
}

/// Smallest set covering at least `t` edges, by full subset enumeration.
pub fn brute_pvc(g: &Graph, t: usize) -> usize {
    all_masks(g.n())
        .filter(|&mask| covered(g, mask) >= t)
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set covers every edge")
}

/// Minimum sizes for every target `0..=m` at once.
pub fn brute_pvc_curve(g: &Graph) -> Vec<usize> {
    let mut best = vec![usize::MAX; g.m() + 1];
    for mask in all_masks(g.n()) {
        let c = covered(g, mask);
        best[c] = best[c].min(mask.count_ones() as usize);
    }
    for c in (0..g.m()).rev() {
        best[c] = best[c].min(best[c + 1]);
    }
    best
}

/// Vertex cover number as `n` minus the largest independent set.
pub fn vertex_cover_via_mis(g: &Graph) -> usize {
    let largest = all_masks(g.n())
        .filter(|&mask| inside(g, mask) == 0)
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0);
    g.n() - largest
}

fn degree(g: &Graph, v: usize) -> usize {
    g.edges().iter().filter(|&&(a, b)| a == v || b == v).count()
}

/// Largest total of a threshold assignment under which `mask` is a static
/// monopoly: outside vertices need exactly their neighbours in the set,
/// inside vertices can take their full degree.
pub fn static_capacity(g: &Graph, mask: u32) -> usize {
    (0..g.n())
        .map(|v| {
            if mask >> v & 1 == 1 {
                degree(g, v)
            } else {
                g.edges()
                    .iter()
                    .filter(|&&(a, b)| {
                        (a == v && mask >> b & 1 == 1) || (b == v && mask >> a & 1 == 1)
                    })
                    .count()
            }
        })
        .sum()
}

/// `ceil(n * p / q)` for a nonnegative fraction.
pub fn demand(n: usize, p: i64, q: i64) -> usize {
    let num = n as i64 * p;
    ((num + q - 1) / q) as usize
}

/// Smallest static monopoly over all assignments with total at least
/// `need`, by subset enumeration.
pub fn brute_smon(g: &Graph, need: usize) -> Option<usize> {
    all_masks(g.n())
        .filter(|&mask| static_capacity(g, mask) >= need)
        .map(|mask| mask.count_ones() as usize)
        .min()
}

/// Smallest dynamic monopoly over all assignments with total at least
/// `need`, via the largest vertex set whose induced subgraph is sparse
/// enough to be activated last.
pub fn brute_sdyn(g: &Graph, need: usize) -> Option<usize> {
    let slack = (2 * g.m()).checked_sub(need)?;
    let largest = all_masks(g.n())
        .filter(|&mask| inside(g, mask) <= slack)
        .map(|mask| mask.count_ones() as usize)
        .max()?;
    Some(g.n() - largest)
}

/// Deterministic threshold closure from `seed`, written out directly.
pub fn closure(g: &Graph, tau: &[usize], seed: u32) -> u32 {
    let mut active = seed;
    loop {
        let mut next = active;
        for v in 0..g.n() {
            if active >> v & 1 == 0 {
                let lit = g
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| {
                        (a == v && active >> b & 1 == 1) || (b == v && active >> a & 1 == 1)
                    })
                    .count();
                if lit >= tau[v] {
                    next |= 1 << v;
                }
            }
        }
        if next == active {
            return active;
        }
        active = next;
    }
}

/// Smallest dynamic monopoly over every threshold assignment with total at
/// least `need`, enumerating the assignments themselves. Tiny graphs only.
pub fn brute_sdyn_over_assignments(g: &Graph, need: usize) -> Option<usize> {
    let n = g.n();
    let full = (1u32 << n) - 1;
    let degrees: Vec<usize> = (0..n).map(|v| degree(g, v)).collect();
    let mut tau = vec![0usize; n];
    let mut best: Option<usize> = None;
    loop {
        if tau.iter().sum::<usize>() >= need {
            let smallest = all_masks(n)
                .filter(|&seed| closure(g, &tau, seed) == full)
                .map(|seed| seed.count_ones() as usize)
                .min()
                .expect("seeding everything activates everything");
            best = Some(best.map_or(smallest, |b| b.min(smallest)));
        }
        // Odometer over 0..=deg(v) for every vertex.
        let mut i = 0;
        while i < n && tau[i] == degrees[i] {
            tau[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        tau[i] += 1;
    }
}
