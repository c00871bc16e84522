use super::{Edge, Graph, VertexId};

/// Blocks (maximal 2-connected subgraphs, bridges and isolated vertices)
/// together with the cut vertices and the block-cut tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex set of each block.
    pub blocks: Vec<Vec<VertexId>>,
    /// Edges of each block, `(u, v)` with `u < v`, sorted.
    pub block_edges: Vec<Vec<Edge>>,
    pub cut_vertices: Vec<VertexId>,
    /// Block-cut tree edges as `(block index, cut vertex)`.
    pub tree: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    pub fn blocks_containing(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.binary_search(&v).is_ok())
            .map(|(i, _)| i)
    }
}

struct Frame {
    v: VertexId,
    parent: Option<VertexId>,
    next: usize,
}

/// Hopcroft-Tarjan biconnected components, iterative.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut block_edges: Vec<Vec<Edge>> = Vec::new();
    let mut isolated = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            next: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next];
                frame.next += 1;
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push(Frame {
                        v: w,
                        parent: Some(v),
                        next: 0,
                    });
                } else if Some(w) != frame.parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(pf) = stack.last() {
                    let p = pf.v;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        edges.sort_unstable();
                        block_edges.push(edges);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks: Vec<(Vec<VertexId>, Vec<Edge>)> = block_edges
        .into_iter()
        .map(|edges| {
            let mut vs: Vec<VertexId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vs.sort_unstable();
            vs.dedup();
            (vs, edges)
        })
        .chain(isolated.into_iter().map(|v| (vec![v], Vec::new())))
        .collect();
    blocks.sort();

    let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut tree = Vec::new();
    for (i, (vs, _)) in blocks.iter().enumerate() {
        for &c in &cut_vertices {
            if vs.binary_search(&c).is_ok() {
                tree.push((i, c));
            }
        }
    }
    let (blocks, block_edges) = blocks.into_iter().unzip();
    BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices,
        tree,
    }
}
