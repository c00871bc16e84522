use super::{Graph, VertexId};

/// Product vertex `(u, v)` is numbered `u * |V(h)| + v`.
pub fn product_vertex(u: VertexId, v: VertexId, h_order: usize) -> VertexId {
    u * h_order + v
}

/// Cartesian product `g □ h`: `(u, v) ~ (x, y)` iff `u = x` and `vy ∈ E(h)`,
/// or `ux ∈ E(g)` and `v = y`. Vertices are numbered row-major.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let mut p = Graph::empty(ng * nh);
    for u in 0..ng {
        for (v, y) in h.edges() {
            p.add_edge(product_vertex(u, v, nh), product_vertex(u, y, nh))
                .expect("fibre edges are distinct");
        }
    }
    for (u, x) in g.edges() {
        for v in 0..nh {
            p.add_edge(product_vertex(u, v, nh), product_vertex(x, v, nh))
                .expect("layer edges are distinct");
        }
    }
    p
}
