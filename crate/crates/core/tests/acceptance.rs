//! Acceptance criteria. Runs as a plain binary so every criterion prints one
//! PASS or FAIL line; the process fails if any criterion does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    is_k3_or_k5, oracle_has_cover, oracle_is_cover, random_connected, random_covered, simple_paths,
    sweep,
};
use oppdc::construct::{
    bridge2_compose, builtin_fixture, complete_bipartite_cover, cycle_cover, glue_at_vertex,
    product_cover, FixtureName, Side,
};
use oppdc::cover::{oppdc_to_socdc, socdc_to_oppdc, verify_oppdc, verify_socdc, DiPath};
use oppdc::graph::enumerate::connected_graphs;
use oppdc::graph::{cartesian_product, emit_graph6};
use oppdc::hunter::{filter_minimal_counterexample, scan_stream, EntryVerdict, FilterVerdict};
use oppdc::solver::{reduce_solve_lift, solve_exhaustive, solve_structured, Budget, SolveStatus};
use oppdc::{Graph, PathCover};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x0dd_c0de;
const K3_LIMIT: Duration = Duration::from_secs(1);
const K5_LIMIT: Duration = Duration::from_secs(600);
const SWEEP_LIMIT: Duration = Duration::from_secs(300);
const RANDOM_INSTANCES: usize = 100;
const LOCAL_LIFT_MIN: f64 = 0.90;
/// Connected graphs on 1..=6 vertices up to isomorphism.
const CONNECTED_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];
/// Labelled connected graphs on 1..=6 vertices.
const LABELLED_CONNECTED: [usize; 6] = [1, 1, 4, 38, 728, 26704];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn owned(c: &PathCover) -> Vec<Vec<usize>> {
    c.paths().iter().map(|p| p.vertices().to_vec()).collect()
}

fn valid(g: &Graph, c: &PathCover) -> bool {
    verify_oppdc(g, c, true).map(|r| r.valid).unwrap_or(false) && oracle_is_cover(g, &owned(c))
}

fn cliques(n: usize, parts: &[&[usize]], extra: &[(usize, usize)]) -> Graph {
    let mut g = Graph::empty(n);
    for part in parts {
        for (i, &a) in part.iter().enumerate() {
            for &b in &part[i + 1..] {
                if !g.has_edge(a, b) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
    }
    for &(a, b) in extra {
        g.add_edge(a, b).unwrap();
    }
    g
}

fn c1_exceptions() -> Outcome {
    let mut line = Vec::new();
    for (n, limit) in [(3, K3_LIMIT), (5, K5_LIMIT)] {
        let g = Graph::complete(n);
        let t = Instant::now();
        let a = solve_exhaustive(&g, Budget::default()).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        let b = solve_exhaustive(&g, Budget::default()).map_err(|e| e.to_string())?;
        let s = solve_structured(&g, Budget::default());
        ensure(a.status == SolveStatus::Unsat, || {
            format!("K{n} exhaustive: {:?}", a.status)
        })?;
        ensure(s.status == SolveStatus::Unsat, || {
            format!("K{n} structured: {:?}", s.status)
        })?;
        ensure(took < limit, || {
            format!("K{n} took {took:?}, limit {limit:?}")
        })?;
        ensure(a.nodes_explored == b.nodes_explored, || {
            format!(
                "K{n} node counts differ: {} vs {}",
                a.nodes_explored, b.nodes_explored
            )
        })?;
        line.push(format!(
            "K{n} unsat in {} nodes, {took:?}",
            a.nodes_explored
        ));
    }
    Ok(line.join("; "))
}

fn c2_fixtures() -> Outcome {
    let expected: [(FixtureName, Graph, Vec<Vec<usize>>); 5] = [
        (
            FixtureName::K3K3CutVertex,
            cliques(5, &[&[0, 1, 2], &[2, 3, 4]], &[]),
            vec![
                vec![0, 2, 3, 4],
                vec![4, 2, 1, 0],
                vec![3, 2],
                vec![2, 0, 1],
                vec![1, 2, 4, 3],
            ],
        ),
        (
            FixtureName::K5K3CutVertex,
            cliques(7, &[&[0, 1, 3], &[2, 3, 4, 5, 6]], &[]),
            vec![
                vec![6, 3, 4, 2, 5],
                vec![4, 5, 3, 6, 2],
                vec![5, 6, 4, 3],
                vec![1, 0, 3, 2, 6, 5, 4],
                vec![3, 1],
                vec![2, 3, 0],
                vec![0, 1, 3, 5, 2, 4, 6],
            ],
        ),
        (
            FixtureName::K5K5CutVertex,
            cliques(9, &[&[0, 1, 2, 3, 4], &[1, 5, 6, 7, 8]], &[]),
            vec![
                vec![0, 3, 2, 4, 1, 8, 6, 7, 5],
                vec![4, 2, 3, 0, 1, 5, 7, 6, 8],
                vec![7, 1, 3],
                vec![5, 1, 0],
                vec![3, 4, 0, 2, 1, 6, 5, 8, 7],
                vec![2, 0, 4, 3, 1, 7, 8, 5, 6],
                vec![6, 1, 2],
                vec![8, 1],
                vec![1, 4],
            ],
        ),
        (
            FixtureName::K5MinusEdge,
            cliques(5, &[&[0, 2, 3, 4], &[1, 2, 3, 4]], &[]),
            vec![
                vec![0, 4, 3, 2],
                vec![4, 1, 2, 0, 3],
                vec![2, 3, 1, 4, 0],
                vec![3, 4, 2, 1],
                vec![1, 3, 0, 2, 4],
            ],
        ),
        (
            FixtureName::K5K5TwoBridge,
            cliques(10, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]], &[(0, 5), (1, 6)]),
            vec![
                vec![0, 3, 4, 2, 1, 6, 9, 5, 8, 7],
                vec![3, 1, 2, 0],
                vec![2, 3, 0, 1, 4],
                vec![4, 0, 5],
                vec![1, 0, 2, 4, 3],
                vec![6, 8, 9, 7, 5, 0, 4, 1, 3, 2],
                vec![8, 5, 7, 6],
                vec![7, 8, 6, 5, 9],
                vec![9, 6, 1],
                vec![5, 6, 7, 9, 8],
            ],
        ),
    ];
    let mut mutants = 0;
    for (name, graph, words) in expected {
        let (g, c) = builtin_fixture(name);
        ensure(g == graph, || format!("{name:?}: graph differs"))?;
        ensure(owned(&c) == words, || {
            format!("{name:?}: cover differs from the transcription")
        })?;
        ensure(valid(&g, &c), || format!("{name:?}: cover does not verify"))?;
        let mut variants = Vec::new();
        for (i, p) in words.iter().enumerate() {
            for j in 0..p.len() {
                for v in (0..g.order()).filter(|&v| v != p[j]) {
                    let mut w = words.clone();
                    w[i][j] = v;
                    variants.push(w);
                }
                if j + 1 < p.len() {
                    let mut w = words.clone();
                    w[i].swap(j, j + 1);
                    variants.push(w);
                }
            }
            let mut w = words.clone();
            w[i].pop();
            variants.push(w);
        }
        for w in variants {
            let m = PathCover::new(w.iter().cloned().map(DiPath::new).collect());
            let r = verify_oppdc(&g, &m, true).map_err(|e| e.to_string())?;
            ensure(!r.valid && !oracle_is_cover(&g, &w), || {
                format!("{name:?}: mutant {w:?} accepted")
            })?;
            mutants += 1;
        }
    }
    Ok(format!(
        "5 fixtures match and verify, {mutants} mutants rejected (vertex swaps, arc reversals, dropped end arcs)"
    ))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn automorphisms(g: &Graph, perms: &[Vec<usize>]) -> usize {
    perms
        .iter()
        .filter(|p| g.edges().all(|(a, b)| g.has_edge(p[a], p[b])))
        .count()
}

fn labelled_connected(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len())
        .filter(|bits| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap().is_connected()
        })
        .count()
}

fn c3_sweep() -> Outcome {
    for n in 1..=6 {
        let gs = connected_graphs(n);
        ensure(gs.len() == CONNECTED_COUNTS[n - 1], || {
            format!("{} graphs on {n} vertices", gs.len())
        })?;
        let perms = permutations(n);
        let factorial = perms.len();
        let orbit_sum: usize = gs
            .iter()
            .map(|g| factorial / automorphisms(g, &perms))
            .sum();
        let brute = labelled_connected(n);
        ensure(
            orbit_sum == LABELLED_CONNECTED[n - 1] && brute == orbit_sum,
            || format!("n={n}: orbit sum {orbit_sum}, brute force {brute}"),
        )?;
    }
    let graphs = sweep();
    let t = Instant::now();
    let mut covered = 0;
    for g in &graphs {
        let o = solve_structured(g, Budget::default());
        if is_k3_or_k5(g) {
            ensure(o.status == SolveStatus::Unsat, || {
                format!("{}: {:?}", emit_graph6(g), o.status)
            })?;
        } else {
            ensure(o.status == SolveStatus::Cover, || {
                format!("{}: {:?}", emit_graph6(g), o.status)
            })?;
            let c = o.cover.unwrap();
            ensure(valid(g, &c), || {
                format!("{}: invalid cover", emit_graph6(g))
            })?;
            covered += 1;
        }
    }
    let took = t.elapsed();
    ensure(took < SWEEP_LIMIT, || format!("sweep took {took:?}"))?;
    Ok(format!(
        "{} graphs, {covered} covered, K3 and K5 unsat, {took:?}",
        graphs.len()
    ))
}

fn c4_constructors() -> Outcome {
    for n in 4..=50 {
        let c = cycle_cover(n).map_err(|e| e.to_string())?;
        ensure(c.len() == n && valid(&Graph::cycle(n), &c), || {
            format!("C{n}")
        })?;
    }
    ensure(cycle_cover(3).is_err(), || "C3 accepted".into())?;
    for n in 1..=12 {
        for m in 1..=12 {
            let c = complete_bipartite_cover(n, m).map_err(|e| e.to_string())?;
            let g = Graph::complete_bipartite(n, m);
            ensure(
                c.len() == n + m && c.arc_count() == 2 * n * m && valid(&g, &c),
                || format!("K{n},{m}"),
            )?;
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANDOM_INSTANCES {
        let (g, cg) = random_covered(&mut rng, 5);
        let (h, ch) = random_covered(&mut rng, 5);
        let c = product_cover(&g, &cg, &h, &ch).map_err(|e| e.to_string())?;
        let p = cartesian_product(&g, &h);
        ensure(c.len() == p.order() && valid(&p, &c), || {
            format!("product of {} and {}", emit_graph6(&g), emit_graph6(&h))
        })?;
    }
    Ok(format!(
        "cycles 4..=50, bicliques up to 12x12, {RANDOM_INSTANCES} products"
    ))
}

fn random_side(rng: &mut StdRng, triangle: bool) -> Side {
    match rng.gen_range(0..6) {
        0 if triangle => Side::Triangle,
        1 => Side::K5,
        _ => {
            let (g, c) = random_covered(rng, 6);
            Side::covered(g, c)
        }
    }
}

fn c5_compositions() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let (mut special_glue, mut special_bridge) = (0, 0);
    for _ in 0..RANDOM_INSTANCES {
        let (s1, s2) = (random_side(&mut rng, true), random_side(&mut rng, true));
        let (n1, n2) = (s1.graph().order(), s2.graph().order());
        let (v1, v2) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let c = glue_at_vertex(&s1, v1, &s2, v2).map_err(|e| format!("glue: {e}"))?;
        ensure(
            c.cover.len() == n1 + n2 - 1 && valid(&c.graph, &c.cover),
            || format!("glue {s1:?} at {v1} with {s2:?} at {v2}"),
        )?;
        special_glue +=
            usize::from(!matches!(s1, Side::Covered { .. }) || !matches!(s2, Side::Covered { .. }));
    }
    let mut tries = 0;
    let mut done = 0;
    while done < RANDOM_INSTANCES {
        tries += 1;
        let (s1, s2) = (random_side(&mut rng, false), random_side(&mut rng, false));
        let (n1, n2) = (s1.graph().order(), s2.graph().order());
        if n1 < 2 || n2 < 2 {
            continue;
        }
        let (u, w) = (rng.gen_range(0..n1), rng.gen_range(0..n1));
        let (v, x) = (rng.gen_range(0..n2), rng.gen_range(0..n2));
        if u == w || v == x {
            continue;
        }
        let c = bridge2_compose(&s1, &s2, (u, v), (w, x)).map_err(|e| format!("bridges: {e}"))?;
        ensure(
            c.cover.len() == n1 + n2 && valid(&c.graph, &c.cover),
            || format!("bridges {s1:?} {s2:?} ({u},{v}) ({w},{x})"),
        )?;
        special_bridge += usize::from(matches!(s1, Side::K5) || matches!(s2, Side::K5));
        done += 1;
    }
    Ok(format!(
        "{RANDOM_INSTANCES} vertex gluings ({special_glue} with K3/K5), {done} two-bridge joins ({special_bridge} with K5, {tries} draws)"
    ))
}

fn c6_socdc() -> Outcome {
    let mut count = 0;
    for g in sweep() {
        if is_k3_or_k5(&g) || g.has_isolated_vertex() {
            continue;
        }
        let c = solve_structured(&g, Budget::default())
            .cover
            .ok_or("no cover")?;
        let (apex_graph, cycles, apex) = oppdc_to_socdc(&g, &c).map_err(|e| e.to_string())?;
        let r = verify_socdc(&apex_graph, &cycles, apex_graph.order() - 1)
            .map_err(|e| e.to_string())?;
        ensure(r.valid && cycles.len() == g.order(), || {
            format!("{}: {r}", emit_graph6(&g))
        })?;
        let back = socdc_to_oppdc(&apex_graph, apex, &cycles).map_err(|e| e.to_string())?;
        ensure(back == c, || {
            format!("{}: round trip differs", emit_graph6(&g))
        })?;
        count += 1;
    }
    Ok(format!(
        "{count} covers converted to n-cycle covers of G+apex and back"
    ))
}

fn lift_all(graphs: &[Graph]) -> Result<(usize, usize), String> {
    let (mut total, mut local) = (0, 0);
    for g in graphs {
        if is_k3_or_k5(g) || !(0..g.order()).any(|v| g.degree(v) == 3) {
            continue;
        }
        let l = reduce_solve_lift(g, Budget::default())
            .map_err(|e| format!("{}: {e}", emit_graph6(g)))?;
        ensure(valid(g, &l.cover), || {
            format!("{}: invalid lift", emit_graph6(g))
        })?;
        total += 1;
        local += usize::from(!l.global_fallback);
    }
    Ok((total, local))
}

fn c7_lift() -> Outcome {
    let (total, local) = lift_all(&sweep())?;
    let rate = local as f64 / total as f64;
    ensure(rate >= LOCAL_LIFT_MIN, || {
        format!("local lifts {local}/{total} = {rate:.3}")
    })?;
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let extra: Vec<Graph> = (0..RANDOM_INSTANCES)
        .map(|_| {
            let n = rng.gen_range(7..=10);
            random_connected(&mut rng, n, 0.35)
        })
        .collect();
    let (rt, rl) = lift_all(&extra)?;
    Ok(format!(
        "{local}/{total} sweep lifts without global fallback ({:.1}%); random 7..10 vertices: {rl}/{rt}",
        100.0 * rate
    ))
}

fn c8_oracle() -> Outcome {
    let mut systems = 0;
    for n in 1..=4 {
        for g in connected_graphs(n) {
            let want = oracle_has_cover(&g);
            let got = solve_exhaustive(&g, Budget::default()).map_err(|e| e.to_string())?;
            ensure((got.status == SolveStatus::Cover) == want, || {
                format!("{}: {:?}", emit_graph6(&g), got.status)
            })?;
            let paths = simple_paths(&g);
            let mut idx: Vec<usize> = (0..n.min(paths.len())).collect();
            if paths.is_empty() {
                continue;
            }
            loop {
                let w: Vec<Vec<usize>> = idx.iter().map(|&i| paths[i].clone()).collect();
                let c = PathCover::from_sequences(w.clone());
                let r = verify_oppdc(&g, &c, true).map_err(|e| e.to_string())?;
                ensure(r.valid == oracle_is_cover(&g, &w), || {
                    format!("{}: {w:?}", emit_graph6(&g))
                })?;
                systems += 1;
                let k = idx.len();
                let Some(i) = (0..k).rev().find(|&i| idx[i] < paths.len() - k + i) else {
                    break;
                };
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
    }
    Ok(format!(
        "solver and verifier agree with brute force on 11 graphs, {systems} path systems"
    ))
}

fn c9_hunter() -> Outcome {
    let graphs: Vec<Graph> = (5..=6).flat_map(connected_graphs).collect();
    let stream: String = graphs.iter().map(|g| emit_graph6(g) + "\n").collect();
    let summary = scan_stream(stream.as_bytes(), Budget::default()).map_err(|e| e.to_string())?;
    ensure(summary.survivors.is_empty(), || {
        format!("survivors {:?}", summary.survivors)
    })?;
    ensure(summary.entries.len() == graphs.len(), || {
        "entry count".into()
    })?;
    for (g, e) in graphs.iter().zip(&summary.entries) {
        match &e.verdict {
            EntryVerdict::Eliminated(rule, w) => {
                let v = FilterVerdict {
                    eliminated_by: Some(*rule),
                    witness: Some(w.clone()),
                };
                ensure(v.revalidate(g), || {
                    format!("{}: witness for {rule} fails", e.graph6)
                })?;
                let direct = filter_minimal_counterexample(g, Budget::default())
                    .map_err(|e| e.to_string())?;
                ensure(direct == v, || {
                    format!("{}: scan and filter disagree", e.graph6)
                })?;
            }
            EntryVerdict::KnownException(_) => {
                ensure(is_k3_or_k5(g), || format!("{} called exception", e.graph6))?
            }
            other => return Err(format!("{}: {other:?}", e.graph6)),
        }
    }
    Ok(format!(
        "{} graphs, 0 survivors, counts {:?}",
        graphs.len(),
        summary.counts
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("K3 and K5 have no cover", c1_exceptions),
        ("fixtures", c2_fixtures),
        ("all connected graphs up to 6 vertices", c3_sweep),
        ("constructors", c4_constructors),
        ("vertex and two-bridge compositions", c5_compositions),
        ("cycle double cover conversion", c6_socdc),
        ("degree-3 lifts stay local", c7_lift),
        ("brute-force oracle", c8_oracle),
        ("hunter leaves no survivor", c9_hunter),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {} {name}: {msg} [{took:.2}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{took:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
