//! Simple undirected graphs and structural analysis.

mod blocks;
mod connectivity;
mod cycles;
mod dot;
mod ears;
mod edgelist;
pub mod enumerate;
mod graph6;
mod product;

pub use blocks::{blocks, BlockDecomposition};
pub(crate) use connectivity::disconnects;
pub use connectivity::{connectivity_report, is_biconnected, ConnectivityReport, EdgeCut};
pub use cycles::{find_cycle_partition, CycleDecomposition};
pub use dot::emit_dot;
pub use ears::{find_ear_decomposition, standard_ear_decomposition, EarDecomposition};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};
pub use product::{cartesian_product, product_vertex};

use std::fmt;

use thiserror::Error;

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Undirected edge, always stored with the smaller endpoint first.
pub type Edge = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("graph is not 2-connected")]
    NotBiconnected,
}

/// Outcome of a budgeted combinatorial search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted: a certificate of absence.
    Exhausted,
    /// The budget ran out before the search finished.
    Incomplete,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// A finite simple undirected graph on vertices `0..order`.
///
/// Neighbor lists are kept sorted. The symmetric orientation is not stored:
/// every edge `{u, v}` stands for the two arcs `u -> v` and `v -> u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    size: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            size: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are simple")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Graph::from_edges(n, edges).expect("cycle edges are simple")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i));
        Graph::from_edges(n, edges).expect("path edges are simple")
    }

    /// `K_{n,m}` with parts `0..n` and `n..n+m`.
    pub fn complete_bipartite(n: usize, m: usize) -> Self {
        let edges = (0..n).flat_map(|i| (0..m).map(move |j| (i, n + j)));
        Graph::from_edges(n + m, edges).expect("biclique edges are simple")
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.size += 1;
                Ok(())
            }
        }
    }

    /// Adds a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.order()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Arcs of the symmetric orientation, in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size * 2 == n * n.saturating_sub(1)
    }

    pub fn is_isolated(&self, v: VertexId) -> bool {
        self.adj[v].is_empty()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; local id `i` corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        g
    }

    /// Graph on the same vertex set with the given edges only.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = Edge>,
    {
        Graph::from_edges(self.order(), edges).expect("edges taken from a simple graph")
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: VertexId) -> Graph {
        let keep: Vec<VertexId> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let norm: Vec<Edge> = removed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        self.spanning_subgraph(self.edges().filter(|e| !norm.contains(e)))
    }

    /// `self` on `0..n1` followed by `other` shifted by `n1`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = self.clone();
        for _ in 0..other.order() {
            g.add_vertex();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)
                .expect("disjoint union stays simple");
        }
        g
    }

    /// Image of the graph under `map` (old id -> new id) into `n` vertices.
    pub fn relabel(&self, map: &[VertexId], n: usize) -> Graph {
        Graph::from_edges(n, self.edges().map(|(u, v)| (map[u], map[v])))
            .expect("relabeling must be injective")
    }

    /// Neighborhoods as bitmasks; `None` when the order exceeds 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
