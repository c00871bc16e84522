use std::collections::{HashSet, VecDeque};

use super::{is_biconnected, Edge, Graph, GraphError, Search, VertexId};

/// Base cycle plus an ordered list of ears. Each ear is a vertex sequence
/// whose two (distinct) endpoints are already present and whose internal
/// vertices are new.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub base_cycle: Vec<VertexId>,
    pub ears: Vec<Vec<VertexId>>,
}

impl EarDecomposition {
    /// Ear lengths in edges.
    pub fn ear_lengths(&self) -> Vec<usize> {
        self.ears.iter().map(|e| e.len() - 1).collect()
    }

    pub fn has_only_long_ears(&self) -> bool {
        self.base_cycle.len() >= 4 && self.ears.iter().all(|e| e.len() >= 3)
    }

    /// Re-checks the decomposition against `g`: the base cycle and the ears
    /// partition `E(g)` and every ear attaches by its endpoints only.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let c = &self.base_cycle;
        if c.len() < 3 || c.iter().any(|&v| v >= n) {
            return false;
        }
        let mut present = vec![false; n];
        let mut used: HashSet<Edge> = HashSet::new();
        let take = |u: VertexId, v: VertexId, used: &mut HashSet<Edge>| {
            g.has_edge(u, v) && used.insert((u.min(v), u.max(v)))
        };
        for &v in c {
            if std::mem::replace(&mut present[v], true) {
                return false;
            }
        }
        for i in 0..c.len() {
            if !take(c[i], c[(i + 1) % c.len()], &mut used) {
                return false;
            }
        }
        for ear in &self.ears {
            if ear.len() < 2 || ear.iter().any(|&v| v >= n) {
                return false;
            }
            let (a, z) = (ear[0], ear[ear.len() - 1]);
            if a == z || !present[a] || !present[z] {
                return false;
            }
            for &v in &ear[1..ear.len() - 1] {
                if std::mem::replace(&mut present[v], true) {
                    return false;
                }
            }
            for w in ear.windows(2) {
                if !take(w[0], w[1], &mut used) {
                    return false;
                }
            }
        }
        used.len() == g.size() && present.iter().all(|&p| p)
    }
}

/// Any ear decomposition of a 2-connected graph, built greedily: a shortest
/// cycle through vertex 0, then repeatedly the lexicographically first
/// unused edge leaving the current subgraph, completed by a BFS path back.
pub fn standard_ear_decomposition(g: &Graph) -> Result<EarDecomposition, GraphError> {
    if !is_biconnected(g) {
        return Err(GraphError::NotBiconnected);
    }
    let n = g.order();
    let w0 = g.neighbors(0)[0];
    let back = bfs_path(
        g,
        w0,
        |v| v == 0,
        |u, v| !(u.min(v) == 0 && u.max(v) == w0),
        |_| true,
    )
    .expect("2-connected graphs have a cycle through every edge");
    let mut base = vec![0];
    base.extend(back.iter().copied().take(back.len() - 1));
    let mut in_h = vec![false; n];
    let mut used: HashSet<Edge> = HashSet::new();
    for &v in &base {
        in_h[v] = true;
    }
    for i in 0..base.len() {
        let (a, b) = (base[i], base[(i + 1) % base.len()]);
        used.insert((a.min(b), a.max(b)));
    }
    let mut ears = Vec::new();
    while used.len() < g.size() {
        let (a, b) = g
            .arcs()
            .find(|&(a, b)| in_h[a] && !used.contains(&(a.min(b), a.max(b))))
            .expect("2-connected: an unused edge touches the current subgraph");
        let mut ear = vec![a];
        if in_h[b] {
            ear.push(b);
        } else {
            let rest = bfs_path(g, b, |v| in_h[v] && v != a, |_, _| true, |v| !in_h[v])
                .expect("2-connected: an open ear exists");
            ear.extend(rest);
        }
        for w in ear.windows(2) {
            used.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &ear {
            in_h[v] = true;
        }
        ears.push(ear);
    }
    Ok(EarDecomposition {
        base_cycle: base,
        ears,
    })
}

/// Shortest path from `start` to the first vertex satisfying `is_target`;
/// intermediate vertices must satisfy `passable` and not be targets.
fn bfs_path(
    g: &Graph,
    start: VertexId,
    is_target: impl Fn(VertexId) -> bool,
    edge_ok: impl Fn(VertexId, VertexId) -> bool,
    passable: impl Fn(VertexId) -> bool,
) -> Option<Vec<VertexId>> {
    let n = g.order();
    let mut prev = vec![usize::MAX; n];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if prev[w] != usize::MAX || !edge_ok(u, w) {
                continue;
            }
            if is_target(w) {
                let mut path = vec![w];
                let mut x = u;
                while x != start {
                    path.push(x);
                    x = prev[x];
                }
                path.push(start);
                path.reverse();
                return Some(path);
            }
            if passable(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Finds an ear decomposition of a 2-connected graph.
///
/// Without `require_long_ears` any decomposition is returned. With it, the
/// base cycle must have length at least 4 and every ear length at least 2;
/// the search peels maximal chains of degree-2 vertices off the graph in
/// reverse (shortest chain first) while the remainder stays 2-connected,
/// memoising dead states. `Exhausted` is a certificate that no such
/// decomposition exists; `Incomplete` means `max_nodes` ran out (or the
/// graph has more than 64 vertices).
pub fn find_ear_decomposition(
    g: &Graph,
    require_long_ears: bool,
    max_nodes: u64,
) -> Result<Search<EarDecomposition>, GraphError> {
    if !require_long_ears {
        return standard_ear_decomposition(g).map(Search::Found);
    }
    if !is_biconnected(g) {
        return Err(GraphError::NotBiconnected);
    }
    let Some(adj) = g.adjacency_masks() else {
        return Ok(Search::Incomplete);
    };
    let mut peeler = Peeler {
        dead: HashSet::new(),
        nodes: 0,
        max_nodes,
        tripped: false,
    };
    let mut removed = Vec::new();
    match peeler.search(adj, &mut removed) {
        Some(base) => {
            removed.reverse();
            Ok(Search::Found(EarDecomposition {
                base_cycle: base,
                ears: removed,
            }))
        }
        None if peeler.tripped => Ok(Search::Incomplete),
        None => Ok(Search::Exhausted),
    }
}

struct Peeler {
    dead: HashSet<Vec<u64>>,
    nodes: u64,
    max_nodes: u64,
    tripped: bool,
}

fn deg(adj: &[u64], v: usize) -> u32 {
    adj[v].count_ones()
}

impl Peeler {
    fn search(&mut self, adj: Vec<u64>, removed: &mut Vec<Vec<VertexId>>) -> Option<Vec<VertexId>> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.tripped = true;
            return None;
        }
        let active: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
        if active.iter().all(|&v| deg(&adj, v) == 2) {
            return (active.len() >= 4).then(|| walk_cycle(&adj, active[0]));
        }
        if self.dead.contains(&adj) {
            return None;
        }
        for chain in chains(&adj) {
            let mut next = adj.clone();
            for w in chain.windows(2) {
                next[w[0]] &= !(1 << w[1]);
                next[w[1]] &= !(1 << w[0]);
            }
            if !masks_biconnected(&next) {
                continue;
            }
            removed.push(chain);
            if let Some(base) = self.search(next, removed) {
                return Some(base);
            }
            removed.pop();
            if self.tripped {
                return None;
            }
        }
        self.dead.insert(adj);
        None
    }
}

/// Maximal chains with at least one internal vertex, internal vertices of
/// degree 2 and endpoints of degree at least 3; sorted by (length, sequence).
fn chains(adj: &[u64]) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for a in 0..adj.len() {
        if deg(adj, a) < 3 {
            continue;
        }
        let mut ns = adj[a];
        while ns != 0 {
            let b = ns.trailing_zeros() as usize;
            ns &= ns - 1;
            if deg(adj, b) != 2 {
                continue;
            }
            let mut chain = vec![a, b];
            let (mut prev, mut cur) = (a, b);
            while deg(adj, cur) == 2 {
                let next = (adj[cur] & !(1 << prev)).trailing_zeros() as usize;
                chain.push(next);
                prev = cur;
                cur = next;
            }
            if a < cur {
                out.push(chain);
            }
        }
    }
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

fn walk_cycle(adj: &[u64], start: usize) -> Vec<VertexId> {
    let mut cyc = vec![start];
    let mut prev = start;
    let mut cur = adj[start].trailing_zeros() as usize;
    while cur != start {
        cyc.push(cur);
        let next = (adj[cur] & !(1 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    cyc
}

fn masks_biconnected(adj: &[u64]) -> bool {
    let active: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    let mut local = vec![usize::MAX; adj.len()];
    for (i, &v) in active.iter().enumerate() {
        local[v] = i;
    }
    let mut g = Graph::empty(active.len());
    for &v in &active {
        let mut ns = adj[v];
        while ns != 0 {
            let w = ns.trailing_zeros() as usize;
            ns &= ns - 1;
            if v < w {
                g.add_edge(local[v], local[w])
                    .expect("masks describe a simple graph");
            }
        }
    }
    is_biconnected(&g)
}
