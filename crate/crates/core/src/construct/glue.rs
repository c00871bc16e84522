//! Compositions along a shared vertex and along two bridge edges.
//!
//! Both operations take the two parts with their own vertex ids and return
//! the combined graph: the first part keeps its ids, the second part is
//! appended after it. [`Composite::side2_map`] records where every vertex of
//! the second part ended up.

use super::fixtures::{builtin_fixture, k5_minus_edge_paths, FixtureName};
use super::{checked, require_valid, ConstructError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{Graph, VertexId};

/// One operand of a composition: a graph with a valid cover, or literally
/// `K3` / `K5`, which have none.
#[derive(Debug, Clone)]
pub enum Side {
    Covered { graph: Graph, cover: PathCover },
    Triangle,
    K5,
}

impl Side {
    pub fn covered(graph: Graph, cover: PathCover) -> Self {
        Side::Covered { graph, cover }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Side::Covered { graph, .. } => graph.clone(),
            Side::Triangle => Graph::complete(3),
            Side::K5 => Graph::complete(5),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Side::Covered { .. } => "covered graph",
            Side::Triangle => "K3",
            Side::K5 => "K5",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Composite {
    pub graph: Graph,
    pub cover: PathCover,
    /// Id in `graph` of every vertex of the second operand.
    pub side2_map: Vec<VertexId>,
}

fn combine(g1: &Graph, g2: &Graph, map2: &[VertexId], n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for (a, b) in g1.edges() {
        g.add_edge(a, b).expect("first part is simple");
    }
    for (a, b) in g2.edges() {
        g.add_edge(map2[a], map2[b]).expect("parts share no edge");
    }
    g
}

/// Non-shared vertices of a part in ascending order, as combined ids.
fn others(map: &[VertexId], shared: VertexId) -> Vec<VertexId> {
    let mut v: Vec<VertexId> = map.iter().copied().filter(|&x| x != shared).collect();
    v.sort_unstable();
    v
}

fn take(paths: &mut Vec<DiPath>, pick: impl Fn(&DiPath) -> bool) -> DiPath {
    let i = paths
        .iter()
        .position(pick)
        .expect("valid cover has the path");
    paths.remove(i)
}

fn take_ending(paths: &mut Vec<DiPath>, v: VertexId) -> DiPath {
    take(paths, |p| p.last() == v)
}

fn take_starting(paths: &mut Vec<DiPath>, v: VertexId) -> DiPath {
    take(paths, |p| p.first() == v)
}

/// Glues two parts at one vertex: `v1` of the first is identified with `v2`
/// of the second.
///
/// Two covered parts are joined by merging the path of the first ending at
/// the shared vertex with the path of the second starting there. A `K3` or
/// `K5` part is handled by the dedicated surgeries, and two such parts by the
/// fixtures.
pub fn glue_at_vertex(
    s1: &Side,
    v1: VertexId,
    s2: &Side,
    v2: VertexId,
) -> Result<Composite, ConstructError> {
    let (g1, g2) = (s1.graph(), s2.graph());
    let (n1, n2) = (g1.order(), g2.order());
    if v1 >= n1 || v2 >= n2 {
        return Err(ConstructError::Domain("shared vertex out of range".into()));
    }
    for s in [s1, s2] {
        if let Side::Covered { graph, cover } = s {
            require_valid(graph, cover)?;
        }
    }
    let v = v1;
    let n = n1 + n2 - 1;
    let map2: Vec<VertexId> = (0..n2)
        .map(|x| match x.cmp(&v2) {
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Less => n1 + x,
            std::cmp::Ordering::Greater => n1 + x - 1,
        })
        .collect();
    let map1: Vec<VertexId> = (0..n1).collect();
    let graph = combine(&g1, &g2, &map2, n);

    let paths = match (s1, s2) {
        (Side::Covered { cover: c1, .. }, Side::Covered { cover: c2, .. }) => {
            let mut p1 = c1.paths().to_vec();
            let mut p2 = c2.relabel(&map2).into_paths();
            let head = take_ending(&mut p1, v);
            let tail = take_starting(&mut p2, v);
            p1.push(head.join(&tail));
            p1.extend(p2);
            p1
        }
        (Side::Covered { graph: gc, cover }, marker)
        | (marker, Side::Covered { graph: gc, cover }) => {
            if gc.order() == 1 {
                return Err(ConstructError::NoCover(marker.name().into()));
            }
            let (cmap, mmap) = if matches!(s1, Side::Covered { .. }) {
                (&map1, &map2)
            } else {
                (&map2, &map1)
            };
            let mut rest = cover.relabel(cmap).into_paths();
            let into_v = take_ending(&mut rest, v);
            let from_v = take_starting(&mut rest, v);
            let o = others(mmap, v);
            match marker {
                Side::Triangle => {
                    let (u, w) = (o[0], o[1]);
                    rest.push(into_v.then(w).then(u));
                    rest.push(DiPath::new(vec![u, v]));
                    rest.push(DiPath::new(vec![v, u, w]));
                    rest.push(from_v.after(w));
                }
                Side::K5 => {
                    // letters u v w x y of the K5 - uv cover
                    let letter = [o[0], v, o[1], o[2], o[3]];
                    let mut k5: Vec<DiPath> = k5_minus_edge_paths()
                        .iter()
                        .map(|p| p.relabel(&letter))
                        .collect();
                    let u = letter[0];
                    let from_u = take_starting(&mut k5, u);
                    rest.push(into_v.then(u).join(&from_u));
                    rest.push(from_v.after(u));
                    rest.extend(k5);
                }
                Side::Covered { .. } => unreachable!(),
            }
            rest
        }
        (a, b) => {
            let o1 = others(&map1, v);
            let o2 = others(&map2, v);
            let (name, letters) = match (a, b) {
                (Side::Triangle, Side::Triangle) => (
                    FixtureName::K3K3CutVertex,
                    vec![o1[0], o1[1], v, o2[0], o2[1]],
                ),
                (Side::K5, Side::Triangle) | (Side::Triangle, Side::K5) => {
                    let (k5, k3) = if matches!(a, Side::K5) {
                        (&o1, &o2)
                    } else {
                        (&o2, &o1)
                    };
                    (
                        FixtureName::K5K3CutVertex,
                        vec![k3[0], k3[1], k5[0], v, k5[1], k5[2], k5[3]],
                    )
                }
                _ => (
                    FixtureName::K5K5CutVertex,
                    vec![o1[0], v, o1[1], o1[2], o1[3], o2[0], o2[1], o2[2], o2[3]],
                ),
            };
            builtin_fixture(name).1.relabel(&letters).into_paths()
        }
    };
    let cover = checked(&graph, PathCover::new(paths))?;
    Ok(Composite {
        graph,
        cover,
        side2_map: map2,
    })
}

/// Joins two vertex-disjoint parts by the bridge edges `a = (u, v)` and
/// `b = (w, x)` with `u, w` in the first part and `v, x` in the second
/// (ids local to each part). The second part is shifted by the order of the
/// first.
pub fn bridge2_compose(
    s1: &Side,
    s2: &Side,
    a: (VertexId, VertexId),
    b: (VertexId, VertexId),
) -> Result<Composite, ConstructError> {
    if matches!(s1, Side::Triangle) || matches!(s2, Side::Triangle) {
        return Err(ConstructError::Domain(
            "a K3 part cannot be joined by two bridges".into(),
        ));
    }
    let (g1, g2) = (s1.graph(), s2.graph());
    let (n1, n2) = (g1.order(), g2.order());
    let ((u, v), (w, x)) = (a, b);
    if u >= n1 || w >= n1 || v >= n2 || x >= n2 {
        return Err(ConstructError::Domain(
            "bridge endpoint out of range".into(),
        ));
    }
    if u == w || v == x {
        return Err(ConstructError::Domain(
            "the two bridges share a vertex".into(),
        ));
    }
    for s in [s1, s2] {
        if let Side::Covered { graph, cover } = s {
            require_valid(graph, cover)?;
        }
    }
    let map2: Vec<VertexId> = (0..n2).map(|y| n1 + y).collect();
    let (v, x) = (map2[v], map2[x]);
    let mut graph = combine(&g1, &g2, &map2, n1 + n2);
    graph.add_edge(u, v).expect("bridges are new");
    graph.add_edge(w, x).expect("bridges are new");

    let paths = match (s1, s2) {
        (Side::Covered { cover: c1, .. }, Side::Covered { cover: c2, .. }) => {
            let mut p1 = c1.paths().to_vec();
            let mut p2 = c2.relabel(&map2).into_paths();
            let into_u = take_ending(&mut p1, u);
            let into_w = take_ending(&mut p1, w);
            let from_v = take_starting(&mut p2, v);
            let from_x = take_starting(&mut p2, x);
            p1.push(into_u.then(v).join(&from_v));
            p1.push(DiPath::new(vec![v, u]));
            p1.push(into_w.then(x).join(&from_x));
            p1.push(DiPath::new(vec![x, w]));
            p1.extend(p2);
            p1
        }
        (Side::K5, Side::K5) => {
            let o1 = others(&(0..n1).collect::<Vec<_>>(), u);
            let o1: Vec<VertexId> = o1.into_iter().filter(|&y| y != w).collect();
            let o2: Vec<VertexId> = others(&map2, v).into_iter().filter(|&y| y != x).collect();
            let letters = [u, w, o1[0], o1[1], o1[2], v, x, o2[0], o2[1], o2[2]];
            builtin_fixture(FixtureName::K5K5TwoBridge)
                .1
                .relabel(&letters)
                .into_paths()
        }
        _ => {
            // K5 on u v w x y, bridges u u' and v v'
            let k5_first = matches!(s1, Side::K5);
            let (ku, kv, ou, ov) = if k5_first { (u, w, v, x) } else { (v, x, u, w) };
            let id1: Vec<VertexId> = (0..n1).collect();
            let (kmap, cover, cmap) = match (s1, s2) {
                (Side::K5, Side::Covered { cover, .. }) => (&id1, cover, &map2),
                (Side::Covered { cover, .. }, Side::K5) => (&map2, cover, &id1),
                _ => unreachable!(),
            };
            let rest_ids: Vec<VertexId> =
                others(kmap, ku).into_iter().filter(|&y| y != kv).collect();
            let letter = [ku, kv, rest_ids[0], rest_ids[1], rest_ids[2]];
            let mut k5: Vec<DiPath> = k5_minus_edge_paths()
                .iter()
                .map(|p| p.relabel(&letter))
                .collect();
            let mut other = cover.relabel(cmap).into_paths();
            let from_u = take_starting(&mut k5, ku);
            let into_v = take_ending(&mut k5, kv);
            let into_ou = take_ending(&mut other, ou);
            let into_ov = take_ending(&mut other, ov);
            let mut paths = Vec::new();
            paths.push(into_ou.then(ku).then(kv));
            paths.push(DiPath::new(vec![ku, ou]));
            paths.push(into_v.then(ov));
            paths.push(into_ov.then(kv).then(ku).join(&from_u));
            paths.extend(k5);
            paths.extend(other);
            paths
        }
    };
    let cover = checked(&graph, PathCover::new(paths))?;
    Ok(Composite {
        graph,
        cover,
        side2_map: map2,
    })
}
