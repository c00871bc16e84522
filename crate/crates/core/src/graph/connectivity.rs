use super::{blocks, Edge, Graph, VertexId};

/// A set of one or two edges whose removal disconnects the graph.
pub type EdgeCut = Vec<Edge>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub is_connected: bool,
    pub cut_vertices: Vec<VertexId>,
    /// Bridges as singleton cuts, then every pair of non-bridge edges whose
    /// joint removal disconnects. Empty for disconnected graphs.
    pub edge_cuts_le2: Vec<EdgeCut>,
    /// `min(lambda(G), 3)`; zero for disconnected graphs.
    pub edge_connectivity_capped: usize,
}

/// 2-connected: at least three vertices, connected, no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && blocks(g).cut_vertices.is_empty()
}

fn connected_without(g: &Graph, removed: &[Edge]) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let gone = |u: VertexId, v: VertexId| removed.contains(&(u.min(v), u.max(v)));
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && !gone(u, w) {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Connectivity summary with every edge cut of size at most two.
/// Pairs are enumerated exhaustively, O(m^2 (n + m)).
pub fn connectivity_report(g: &Graph) -> ConnectivityReport {
    let is_connected = g.is_connected();
    let cut_vertices = blocks(g).cut_vertices;
    if !is_connected {
        return ConnectivityReport {
            is_connected,
            cut_vertices,
            edge_cuts_le2: Vec::new(),
            edge_connectivity_capped: 0,
        };
    }
    let edges: Vec<Edge> = g.edges().collect();
    let bridges: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|&e| !connected_without(g, &[e]))
        .collect();
    let mut cuts: Vec<EdgeCut> = bridges.iter().map(|&e| vec![e]).collect();
    let rest: Vec<Edge> = edges.into_iter().filter(|e| !bridges.contains(e)).collect();
    let mut pair_found = false;
    for (i, &e) in rest.iter().enumerate() {
        for &f in &rest[i + 1..] {
            if !connected_without(g, &[e, f]) {
                cuts.push(vec![e, f]);
                pair_found = true;
            }
        }
    }
    let edge_connectivity_capped = if !bridges.is_empty() {
        1
    } else if pair_found {
        2
    } else {
        3
    };
    ConnectivityReport {
        is_connected,
        cut_vertices,
        edge_cuts_le2: cuts,
        edge_connectivity_capped,
    }
}

/// True when removing the edges of `cut` disconnects `g`.
pub(crate) fn disconnects(g: &Graph, cut: &[Edge]) -> bool {
    !connected_without(g, cut)
}
