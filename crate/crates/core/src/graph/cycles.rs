use std::collections::HashSet;

use super::{Edge, Graph, Search, VertexId};

/// An ordered partition of `E(G)` into cycles `C_1, ..., C_k` with `C_1` of
/// length at least 4 and every later cycle bringing at least two vertices
/// not seen in earlier cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<VertexId>>,
}

impl CycleDecomposition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut used: HashSet<Edge> = HashSet::new();
        let mut seen = vec![false; n];
        for (i, c) in self.cycles.iter().enumerate() {
            if c.len() < 3 || (i == 0 && c.len() < 4) || c.iter().any(|&v| v >= n) {
                return false;
            }
            let mut distinct = c.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != c.len() {
                return false;
            }
            let fresh = c.iter().filter(|&&v| !seen[v]).count();
            if i > 0 && fresh < 2 {
                return false;
            }
            for j in 0..c.len() {
                let (a, b) = (c[j], c[(j + 1) % c.len()]);
                if !g.has_edge(a, b) || !used.insert((a.min(b), a.max(b))) {
                    return false;
                }
            }
            for &v in c {
                seen[v] = true;
            }
        }
        used.len() == g.size()
    }
}

struct CycleInfo {
    edges: u64,
    vertices: u64,
    seq: Vec<VertexId>,
}

const MAX_CYCLES: usize = 200_000;

fn enumerate_cycles(
    g: &Graph,
    edge_id: &dyn Fn(VertexId, VertexId) -> usize,
) -> Option<Vec<CycleInfo>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn dfs(
        g: &Graph,
        s: VertexId,
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
    ) -> bool {
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if w == s && path.len() >= 3 && path[1] < u {
                out.push(path.clone());
                if out.len() > MAX_CYCLES {
                    return false;
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                let ok = dfs(g, s, path, on_path, out);
                path.pop();
                on_path[w] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut on_path = vec![false; n];
    let mut seqs = Vec::new();
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let ok = dfs(g, s, &mut path, &mut on_path, &mut seqs);
        on_path[s] = false;
        if !ok {
            return None;
        }
    }
    for seq in seqs {
        let mut edges = 0u64;
        let mut vertices = 0u64;
        for j in 0..seq.len() {
            edges |= 1 << edge_id(seq[j], seq[(j + 1) % seq.len()]);
            vertices |= 1 << seq[j];
        }
        out.push(CycleInfo {
            edges,
            vertices,
            seq,
        });
    }
    Some(out)
}

/// Searches for a [`CycleDecomposition`] by backtracking over the simple
/// cycles of `g`, memoising dead `(remaining edges, seen vertices)` states.
///
/// A later triangle must meet the earlier cycles in exactly one vertex so that
/// every prefix can be covered incrementally. Graphs with an odd-degree vertex
/// are rejected immediately. Graphs beyond 64 vertices or 64 edges, or with
/// too many cycles to list, give `Incomplete`.
pub fn find_cycle_partition(g: &Graph, max_nodes: u64) -> Search<CycleDecomposition> {
    if g.size() == 0 || (0..g.order()).any(|v| g.degree(v) % 2 == 1) {
        return Search::Exhausted;
    }
    if g.order() > 64 || g.size() > 64 {
        return Search::Incomplete;
    }
    let edges: Vec<Edge> = g.edges().collect();
    let edge_id = |a: VertexId, b: VertexId| {
        edges
            .binary_search(&(a.min(b), a.max(b)))
            .expect("cycle edges belong to the graph")
    };
    let Some(cycles) = enumerate_cycles(g, &edge_id) else {
        return Search::Incomplete;
    };
    let all = if edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edges.len()) - 1
    };
    let mut s = PartitionSearch {
        cycles: &cycles,
        dead: HashSet::new(),
        nodes: 0,
        max_nodes,
        tripped: false,
        chosen: Vec::new(),
    };
    if s.search(all, 0) {
        Search::Found(CycleDecomposition {
            cycles: s.chosen.iter().map(|&i| cycles[i].seq.clone()).collect(),
        })
    } else if s.tripped {
        Search::Incomplete
    } else {
        Search::Exhausted
    }
}

struct PartitionSearch<'a> {
    cycles: &'a [CycleInfo],
    dead: HashSet<(u64, u64)>,
    nodes: u64,
    max_nodes: u64,
    tripped: bool,
    chosen: Vec<usize>,
}

impl PartitionSearch<'_> {
    fn search(&mut self, remaining: u64, seen: u64) -> bool {
        if remaining == 0 {
            return true;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.tripped = true;
            return false;
        }
        if self.dead.contains(&(remaining, seen)) {
            return false;
        }
        let first = self.chosen.is_empty();
        for (i, c) in self.cycles.iter().enumerate() {
            if c.edges & !remaining != 0 {
                continue;
            }
            let len = c.seq.len();
            let fresh = (c.vertices & !seen).count_ones() as usize;
            let ok = if first {
                len >= 4
            } else if len == 3 {
                fresh == 2
            } else {
                fresh >= 2
            };
            if !ok {
                continue;
            }
            self.chosen.push(i);
            if self.search(remaining & !c.edges, seen | c.vertices) {
                return true;
            }
            self.chosen.pop();
            if self.tripped {
                return false;
            }
        }
        self.dead.insert((remaining, seen));
        false
    }
}
