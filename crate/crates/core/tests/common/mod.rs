//! Shared helpers for the integration tests: a brute-force cover oracle that
//! shares no code with the solver or the verifier, and random instances.

#![allow(dead_code)]

use oppdc::graph::enumerate::connected_graphs;
use oppdc::solver::{solve_structured, Budget, SolveStatus};
use oppdc::{Graph, PathCover};
use rand::rngs::StdRng;
use rand::Rng;

/// Every directed simple path with at least one arc, as vertex sequences.
pub fn simple_paths(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let tip = *cur.last().unwrap();
        for &w in g.neighbors(tip) {
            if !cur.contains(&w) {
                cur.push(w);
                out.push(cur.clone());
                grow(g, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        grow(g, &mut vec![v], &mut out);
    }
    out
}

/// Checks the definition directly: simple paths along edges, every arc of
/// the symmetric orientation exactly once, every vertex first on exactly
/// one path and last on exactly one, single-vertex paths only at isolated
/// vertices.
pub fn oracle_is_cover(g: &Graph, paths: &[Vec<usize>]) -> bool {
    let n = g.order();
    let mut used = vec![vec![0u32; n]; n];
    let mut first = vec![0u32; n];
    let mut last = vec![0u32; n];
    for p in paths {
        if p.is_empty() || p.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = vec![false; n];
        for &v in p {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if p.len() == 1 && g.degree(p[0]) != 0 {
            return false;
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return false;
            }
            used[w[0]][w[1]] += 1;
        }
        first[p[0]] += 1;
        last[p[p.len() - 1]] += 1;
    }
    for a in 0..n {
        if first[a] != 1 || last[a] != 1 {
            return false;
        }
        for b in 0..n {
            let want = u32::from(g.has_edge(a, b));
            if used[a][b] != want {
                return false;
            }
        }
    }
    true
}

/// Exact cover of the arcs by simple paths with distinct first and distinct
/// last vertices; isolated vertices take a single-vertex path.
pub fn oracle_has_cover(g: &Graph) -> bool {
    let n = g.order();
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| g.neighbors(a).iter().map(move |&b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| arcs.iter().position(|&x| x == (a, b)).unwrap();
    let paths: Vec<(Vec<usize>, Vec<usize>)> = simple_paths(g)
        .into_iter()
        .map(|p| {
            let ids = p.windows(2).map(|w| index(w[0], w[1])).collect();
            (p, ids)
        })
        .collect();
    let mut first = vec![false; n];
    let mut last = vec![false; n];
    for v in 0..n {
        if g.degree(v) == 0 {
            first[v] = true;
            last[v] = true;
        }
    }
    let mut covered = vec![false; arcs.len()];
    fn search(
        paths: &[(Vec<usize>, Vec<usize>)],
        covered: &mut [bool],
        first: &mut [bool],
        last: &mut [bool],
    ) -> bool {
        let Some(open) = covered.iter().position(|&c| !c) else {
            return first.iter().all(|&f| f) && last.iter().all(|&l| l);
        };
        for (p, ids) in paths {
            let (s, t) = (p[0], p[p.len() - 1]);
            if !ids.contains(&open) || first[s] || last[t] || ids.iter().any(|&i| covered[i]) {
                continue;
            }
            for &i in ids {
                covered[i] = true;
            }
            first[s] = true;
            last[t] = true;
            if search(paths, covered, first, last) {
                return true;
            }
            for &i in ids {
                covered[i] = false;
            }
            first[s] = false;
            last[t] = false;
        }
        false
    }
    search(&paths, &mut covered, &mut first, &mut last)
}

pub fn sweep() -> Vec<Graph> {
    (1..=6).flat_map(connected_graphs).collect()
}

pub fn is_k3_or_k5(g: &Graph) -> bool {
    (g.order() == 3 || g.order() == 5) && g.is_complete()
}

/// Connected graph on `n` vertices: a random spanning tree plus each other
/// pair with probability `p`.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) && rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// A random connected graph of order 2..=max_n other than K3 and K5,
/// with a cover from the structured solver.
pub fn random_covered(rng: &mut StdRng, max_n: usize) -> (Graph, PathCover) {
    loop {
        let n = rng.gen_range(2..=max_n);
        let g = random_connected(rng, n, 0.4);
        if is_k3_or_k5(&g) {
            continue;
        }
        let o = solve_structured(&g, Budget::default());
        assert_eq!(o.status, SolveStatus::Cover, "no cover for {g:?}");
        return (g, o.cover.unwrap());
    }
}
