//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every expected value comes from the brute-force oracles
//! in `common`, never from the solvers under test.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use partial_cover::corpus::{
    cycle, labeled_graphs, labeled_trees, random_degree_dominant_bipartite, random_graph,
    random_tree, unlabeled_trees,
};
use partial_cover::error::Error;
use partial_cover::monopoly::{is_dynamic_monopoly, is_monopoly, sdyn, sdyn_via_subgraph, smon};
use partial_cover::pvc::{pvc_degree_greedy, pvc_exact, pvc_tree};
use partial_cover::reductions::{build_gadget, verify_lemma1, verify_lemma2};
use partial_cover::verify::threshold_grid;
use partial_cover::{bipartition, Graph, Rational, VertexSet};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn code(g: &Graph) -> String {
    partial_cover::verify::graph_code(g)
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n, 1, 2);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every graph in `graphs` must satisfy `check`; reports the first failure.
fn all_hold<F>(graphs: &[Graph], check: F) -> Result<(), String>
where
    F: Fn(&Graph) -> Result<(), String> + Sync,
{
    graphs
        .par_iter()
        .map(&check)
        .collect::<Result<Vec<()>, String>>()?;
    Ok(())
}

fn pvc_matches_enumeration(g: &Graph) -> Result<(), String> {
    let curve = common::brute_pvc_curve(g);
    for t in 0..=g.m() {
        let got = pvc_exact(g, t).map_err(|e| e.to_string())?;
        ensure(got.size == curve[t], || {
            format!(
                "{} t={t}: exact {} vs enumeration {}",
                code(g),
                got.size,
                curve[t]
            )
        })?;
        ensure(g.coverage(&got.witness).unwrap() >= t, || {
            format!("{} t={t}: bad witness", code(g))
        })?;
    }
    Ok(())
}

fn criterion_1() -> Check {
    let mut graphs: Vec<Graph> = (1..=6)
        .flat_map(labeled_graphs)
        .filter(Graph::is_connected)
        .collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [7, 8] {
        graphs.extend((0..200).map(|_| random_connected(&mut rng, n)));
    }
    all_hold(&graphs, pvc_matches_enumeration)?;
    Ok(format!(
        "{exhaustive} labeled connected graphs (n<=6) + 400 random (n=7,8)"
    ))
}

/// Labeled graphs up to order 5 plus 500 random graphs of orders 6..=8.
fn monopoly_corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(labeled_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..500 {
        let n = 6 + i % 3;
        let p = rng.gen_range(1..=4);
        graphs.push(random_graph(&mut rng, n, p, 5));
    }
    graphs
}

fn fraction(t: Rational) -> (i64, i64) {
    (*t.numer(), *t.denom())
}

fn criterion_2() -> Check {
    let graphs = monopoly_corpus();
    all_hold(&graphs, |g| {
        for t in threshold_grid(g) {
            let (p, q) = fraction(t);
            if g.n() as i64 * p > 2 * g.m() as i64 * q {
                continue;
            }
            let need = common::demand(g.n(), p, q);
            let expected = common::brute_smon(g, need).expect("feasible");
            let got = smon(g, t).map_err(|e| format!("{} t={t}: {e}", code(g)))?;
            ensure(got.size == expected, || {
                format!(
                    "{} t={t}: smon {} vs brute force {expected}",
                    code(g),
                    got.size
                )
            })?;
            ensure(
                is_monopoly(g, &got.witness_tau, &got.monopoly).unwrap()
                    && got.witness_tau.total() >= need,
                || format!("{} t={t}: witness rejected", code(g)),
            )?;
        }
        Ok(())
    })?;
    Ok(format!(
        "{} graphs, every feasible threshold in the grid",
        graphs.len()
    ))
}

fn criterion_3() -> Check {
    let graphs = monopoly_corpus();
    all_hold(&graphs, |g| {
        for t in threshold_grid(g) {
            let (p, q) = fraction(t);
            if g.n() as i64 * p > 2 * g.m() as i64 * q {
                continue;
            }
            let need = common::demand(g.n(), p, q);
            let got = sdyn(g, t).map_err(|e| format!("{} t={t}: {e}", code(g)))?;
            let (via_subgraph, _) = sdyn_via_subgraph(g, t, 14).map_err(|e| e.to_string())?;
            let expected = common::brute_sdyn(g, need).expect("feasible");
            ensure(got.size == via_subgraph && got.size == expected, || {
                format!(
                    "{} t={t}: sdyn {} vs subgraph formula {via_subgraph} vs brute force {expected}",
                    code(g),
                    got.size
                )
            })?;
            ensure(
                is_dynamic_monopoly(g, &got.witness_tau, &got.seed).unwrap()
                    && got.witness_tau.total() >= need,
                || format!("{} t={t}: witness rejected", code(g)),
            )?;
        }
        Ok(())
    })?;
    // On the tiniest graphs, also enumerate the threshold assignments
    // themselves rather than relying on the subgraph characterisation.
    let tiny: Vec<Graph> = (1..=4).flat_map(labeled_graphs).collect();
    all_hold(&tiny, |g| {
        for t in threshold_grid(g) {
            let (p, q) = fraction(t);
            if g.n() as i64 * p > 2 * g.m() as i64 * q {
                continue;
            }
            let need = common::demand(g.n(), p, q);
            let expected = common::brute_sdyn_over_assignments(g, need).expect("feasible");
            let got = sdyn(g, t).unwrap().size;
            ensure(got == expected, || {
                format!(
                    "{} t={t}: sdyn {got} vs assignment enumeration {expected}",
                    code(g)
                )
            })?;
        }
        Ok(())
    })?;
    Ok(format!(
        "{} graphs; {} tiny graphs against all assignments",
        graphs.len(),
        tiny.len()
    ))
}

fn criterion_4() -> Check {
    let graphs: Vec<Graph> = (0..=5).flat_map(labeled_graphs).collect();
    let counts: Vec<usize> = graphs
        .par_iter()
        .map(|g| {
            let mut instances = 0;
            for k in 0..=g.n() {
                for t in 0..=g.m() {
                    let eq = verify_lemma1(g, k, t, 5).map_err(|e| e.to_string())?;
                    ensure(eq.holds(), || format!("{} k={k} t={t}: {eq:?}", code(g)))?;
                    instances += 1;
                }
            }
            Ok(instances)
        })
        .collect::<Result<_, String>>()?;
    Ok(format!(
        "{} instances on {} graphs, zero counterexamples",
        counts.iter().sum::<usize>(),
        graphs.len()
    ))
}

fn criterion_5() -> Check {
    let graphs: Vec<Graph> = (1..=4).flat_map(labeled_graphs).collect();
    let rhos = [
        Rational::new(1, 3),
        Rational::new(1, 2),
        Rational::new(2, 3),
    ];
    let counts: Vec<usize> = graphs
        .par_iter()
        .map(|g| {
            let (n, m) = (g.n(), g.m());
            let mut instances = 0;
            for &rho in &rhos {
                for k in 0..=n {
                    for t in 0..=m {
                        let o = verify_lemma2(g, k, t, rho, 4).map_err(|e| e.to_string())?;
                        let at = || format!("{} k={k} t={t} rho={rho}", code(g));
                        ensure(o.equivalence.holds(), || {
                            format!("{}: {:?}", at(), o.equivalence)
                        })?;
                        ensure(o.s >= 1, || format!("{}: s = {}", at(), o.s))?;
                        ensure(o.edges == m + 3 * n + o.r + o.s + 1, || {
                            format!("{}: |E(H)| = {}", at(), o.edges)
                        })?;
                        ensure(o.vertices == 4 * n + o.r + o.s + 1, || {
                            format!("{}: |V(H)| = {}", at(), o.vertices)
                        })?;
                        instances += 1;
                    }
                }
            }
            Ok(instances)
        })
        .collect::<Result<_, String>>()?;
    Ok(format!(
        "{} instances on {} graphs, zero counterexamples",
        counts.iter().sum::<usize>(),
        graphs.len()
    ))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut graphs = Vec::new();
    while graphs.len() < 300 {
        let a = rng.gen_range(1..=7);
        let b = rng.gen_range(1..=14 - a);
        if let Some(g) = random_degree_dominant_bipartite(&mut rng, a, b) {
            graphs.push((a, g));
        }
    }
    graphs
        .par_iter()
        .map(|(a, g)| {
            let x: VertexSet = (0..*a).collect();
            let view = bipartition(g, Some(&x))
                .unwrap()
                .expect("bipartite by construction");
            ensure(view.degree_dominant(), || {
                format!("{}: hypothesis fails", code(g))
            })?;
            let curve = common::brute_pvc_curve(g);
            for t in 0..=g.m() {
                let greedy = pvc_degree_greedy(&view, g, t).map_err(|e| e.to_string())?;
                let exact = pvc_exact(g, t).unwrap().size;
                ensure(greedy.size == exact && exact == curve[t], || {
                    format!(
                        "{} t={t}: greedy {} exact {exact} enumeration {}",
                        code(g),
                        greedy.size,
                        curve[t]
                    )
                })?;
                ensure(g.coverage(&greedy.witness).unwrap() >= t, || {
                    format!("{} t={t}: bad witness", code(g))
                })?;
            }
            Ok(())
        })
        .collect::<Result<Vec<()>, String>>()?;
    Ok("300 degree-dominant bipartite graphs (n<=14), every t".into())
}

fn tree_matches(g: &Graph) -> Result<(), String> {
    for t in 0..=g.m() {
        let dp = pvc_tree(g, t).map_err(|e| e.to_string())?;
        let exact = pvc_exact(g, t).unwrap().size;
        ensure(dp.size == exact, || {
            format!("{} t={t}: tree dp {} vs exact {exact}", code(g), dp.size)
        })?;
        ensure(
            g.coverage(&dp.witness).unwrap() >= t && dp.witness.len() == dp.size,
            || format!("{} t={t}: bad witness", code(g)),
        )?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let mut trees: Vec<Graph> = (1..=10).flat_map(unlabeled_trees).collect();
    let classes = trees.len();
    trees.extend((1..=7).flat_map(labeled_trees));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    trees.extend((0..100).map(|_| {
        let n = rng.gen_range(11..=18);
        random_tree(&mut rng, n)
    }));
    all_hold(&trees, tree_matches)?;

    let mut slowest = Duration::ZERO;
    for _ in 0..3 {
        let big = random_tree(&mut rng, 2000);
        let start = Instant::now();
        let result = pvc_tree(&big, big.m()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(big.coverage(&result.witness).unwrap() == big.m(), || {
            "n=2000 witness is not a cover".into()
        })?;
        ensure(elapsed < Duration::from_secs(10), || {
            format!("n=2000 took {elapsed:?}")
        })?;
    }
    Ok(format!(
        "{classes} unlabeled trees (n<=10), all labeled trees n<=7, 100 random (n<=18); n=2000 in {slowest:?}"
    ))
}

fn criterion_8() -> Check {
    let mut graphs: Vec<Graph> = (0..=5).flat_map(labeled_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..200 {
        let n = 6 + i % 5;
        let p = rng.gen_range(1..=4);
        graphs.push(random_graph(&mut rng, n, p, 5));
    }
    all_hold(&graphs, |g| {
        let (n, m) = (g.n(), g.m());
        ensure(pvc_exact(g, 0).unwrap().size == 0, || {
            format!("{}: P_0 != 0", code(g))
        })?;
        let cover = common::vertex_cover_via_mis(g);
        let top = pvc_exact(g, m).unwrap().size;
        ensure(top == cover, || {
            format!("{}: P_m = {top}, vertex cover {cover}", code(g))
        })?;
        if n == 0 {
            return Ok(());
        }
        for p in 1..=(2 * m as i64 + 2) {
            for q in 1..=3 {
                let t = Rational::new(p, q);
                let infeasible = n as i64 * p > 2 * m as i64 * q;
                let s = smon(g, t);
                let d = sdyn(g, t);
                ensure(
                    infeasible == matches!(s, Err(Error::Infeasible { .. }))
                        && infeasible == matches!(d, Err(Error::Infeasible { .. })),
                    || format!("{} t={t}: infeasibility misreported", code(g)),
                )?;
                if !infeasible && common::demand(n, p, q) <= m {
                    ensure(d.unwrap().size == 0, || {
                        format!("{} t={t}: Sdyn should be 0", code(g))
                    })?;
                }
            }
        }
        Ok(())
    })?;
    Ok(format!("{} graphs (n<=10)", graphs.len()))
}

const GOLDEN_EDGES: &str = include_str!("golden/c4_k1_t2_rho1_2.edges");
const GOLDEN_SIDECAR: &str = include_str!("golden/c4_k1_t2_rho1_2.json");

fn criterion_9() -> Check {
    let (n, m, k, t) = (4usize, 4usize, 1usize, 2usize);
    let rho = Rational::new(1, 2);
    // Evaluate the calibration formulas by hand in integers.
    // r = ceil(rho/(1-rho) * (n(n-1)/2 + 3n)) + n + 3 with rho/(1-rho) = 1.
    let r = n * (n - 1) / 2 + 3 * n + n + 3;
    // s = floor((t + 3k + (1-rho) r + 1 - rho (m + 3n)) / rho), all halves.
    let s = 2 * (t + 3 * k + 1) + r - (m + 3 * n);
    ensure((r, s) == (25, 21), || {
        format!("hand evaluation gave r={r} s={s}")
    })?;
    let gadget = build_gadget(&cycle(4), k, t, rho).map_err(|e| e.to_string())?;
    ensure((gadget.r, gadget.s) == (r, s), || {
        format!("built r={} s={}", gadget.r, gadget.s)
    })?;
    let (vertices, edges) = (gadget.h.n(), gadget.h.m());
    ensure(vertices == 4 * n + r + s + 1 && vertices == 63, || {
        format!("|V(H)| = {vertices}")
    })?;
    ensure(edges == m + 3 * n + r + s + 1 && edges == 63, || {
        format!("|E(H)| = {edges}")
    })?;
    ensure(gadget.h.to_edge_list() == GOLDEN_EDGES, || {
        "edge list differs from golden file".into()
    })?;
    let sidecar = partial_cover::cli::sidecar_json(&gadget.to_sidecar());
    ensure(sidecar == GOLDEN_SIDECAR, || {
        "sidecar differs from golden file".into()
    })?;
    let again = build_gadget(&cycle(4), k, t, rho).unwrap();
    ensure(again.h.to_edge_list() == GOLDEN_EDGES, || {
        "serialization is not stable".into()
    })?;
    Ok("r=25 s=21 |V(H)|=63 |E(H)|=63, golden files byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "exact partial cover matches subset enumeration",
            criterion_1,
        ),
        ("smallest static monopoly identity", criterion_2),
        ("smallest dynamic monopoly identity", criterion_3),
        ("pendant-triple equivalence battery", criterion_4),
        ("star/path gadget equivalence battery", criterion_5),
        (
            "degree greedy on degree-dominant bipartite graphs",
            criterion_6,
        ),
        ("tree dynamic program", criterion_7),
        ("boundary laws", criterion_8),
        ("golden gadget", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let message = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(message)
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name} — {detail} [{elapsed:.1?}]",
                i + 1
            ),
            Err(reason) => {
                failures += 1;
                println!(
                    "criterion {}: FAIL  {name} — {reason} [{elapsed:.1?}]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
