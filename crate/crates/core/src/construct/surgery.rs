//! Growing a covered graph by one vertex of degree at most two, by edge
//! subdivision, and by ears.

use super::{checked, cycle_cover, require_valid, ConstructError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{EarDecomposition, Graph, VertexId};
use crate::solver::local::{complete_cover, repair_near, Repair};
use crate::solver::search::Meter;

/// Node budget for the completion used when the direct surgery is blocked.
const LOW_DEGREE_NODES: u64 = 5_000_000;

/// Adds a new vertex (id `g.order()`) adjacent to one or two existing
/// vertices and extends `c` to a cover of the result.
///
/// Degree one (`u`): `P_u` is extended by `u -> v` and `v -> u` becomes a new
/// path. Degree two (`u`, `w`): `P_u` is extended by `u -> v`, `v -> w` is
/// prepended to `P^w` and `w -> v -> u` is added. When `P_u` and `P^w` are
/// the same path the roles of `u` and `w` are swapped; when both orders are
/// blocked the cover is completed by search.
pub fn add_vertex_low_degree(
    g: &Graph,
    c: &PathCover,
    neighbors: &[VertexId],
) -> Result<(Graph, PathCover), ConstructError> {
    add_vertex_metered(g, c, neighbors, &mut Meter::new(LOW_DEGREE_NODES, None))
}

pub(crate) fn add_vertex_metered(
    g: &Graph,
    c: &PathCover,
    neighbors: &[VertexId],
    meter: &mut Meter,
) -> Result<(Graph, PathCover), ConstructError> {
    require_valid(g, c)?;
    let n = g.order();
    match neighbors {
        [u] | [u, _] if *u >= n => return Err(ConstructError::Domain(format!("no vertex {u}"))),
        [_, w] if *w >= n => return Err(ConstructError::Domain(format!("no vertex {w}"))),
        [u, w] if u == w => {
            return Err(ConstructError::Domain("neighbors must be distinct".into()))
        }
        [_] | [_, _] => {}
        _ => {
            return Err(ConstructError::Domain(
                "a new vertex needs one or two neighbors".into(),
            ))
        }
    }
    let mut h = g.clone();
    let v = h.add_vertex();
    for &x in neighbors {
        h.add_edge(x, v).expect("new vertex");
    }
    let paths = c.paths();
    if let [u] = *neighbors {
        let mut out: Vec<DiPath> = paths.to_vec();
        let i = c.end_index(u).expect("valid cover");
        out[i] = out[i].then(v);
        out.push(DiPath::new(vec![v, u]));
        return Ok((h.clone(), checked(&h, PathCover::new(out))?));
    }
    let (a, b) = (neighbors[0], neighbors[1]);
    for (u, w) in [(a, b), (b, a)] {
        let iu = c.end_index(u).expect("valid cover");
        let iw = c.begin_index(w).expect("valid cover");
        if iu == iw {
            continue;
        }
        let mut out: Vec<DiPath> = paths.to_vec();
        out[iu] = out[iu].then(v);
        out[iw] = out[iw].after(v);
        out.push(DiPath::new(vec![w, v, u]));
        return Ok((h.clone(), checked(&h, PathCover::new(out))?));
    }
    if let Some(found) = repair_near(&h, paths, &[], &[v, a, b], 3, 20_000, meter) {
        return Ok((h.clone(), checked(&h, found)?));
    }
    match complete_cover(&h, &[], meter) {
        Repair::Found(found) => Ok((h.clone(), checked(&h, found)?)),
        Repair::Exhausted => Err(ConstructError::NoCover(format!("the extended graph {h:?}"))),
        Repair::Tripped => Err(ConstructError::Completion(
            "no cover found for the extended graph".into(),
        )),
    }
}

/// Replaces the edge `xy` by the path `x - v - y` through a new vertex
/// `v = g.order()`. Both traversals are rerouted through `v` and the one
/// from `x` to `y` is split at `v`.
pub fn subdivide_edge(
    g: &Graph,
    c: &PathCover,
    xy: (VertexId, VertexId),
) -> Result<(Graph, PathCover), ConstructError> {
    require_valid(g, c)?;
    let (x, y) = xy;
    if !g.has_edge(x, y) {
        return Err(ConstructError::Domain(format!("{x}-{y} is not an edge")));
    }
    let mut h = g.without_edges(&[(x.min(y), x.max(y))]);
    let v = h.add_vertex();
    h.add_edge(x, v).unwrap();
    h.add_edge(v, y).unwrap();
    let mut out = Vec::with_capacity(c.len() + 1);
    for p in c.paths() {
        let s = p.vertices();
        match s.windows(2).position(|a| a == [x, y] || a == [y, x]) {
            Some(k) if s[k] == x => {
                out.push(DiPath::new([&s[..=k], &[v]].concat()));
                out.push(DiPath::new([&[v], &s[k + 1..]].concat()));
            }
            Some(k) => out.push(DiPath::new([&s[..=k], &[v], &s[k + 1..]].concat())),
            None => out.push(p.clone()),
        }
    }
    Ok((h.clone(), checked(&h, PathCover::new(out))?))
}

/// Attaches a path of `length` edges between the distinct vertices `x` and
/// `y`, with new internal vertices numbered from `g.order()`.
pub fn attach_ear(
    g: &Graph,
    c: &PathCover,
    x: VertexId,
    y: VertexId,
    length: usize,
) -> Result<(Graph, PathCover), ConstructError> {
    attach_ear_tracked(g, c, x, y, length).map(|(h, c, _)| (h, c))
}

/// As [`attach_ear`], also returning the ear as a vertex sequence from `x`
/// to `y`. The ear starts as `x - v - y`; further vertices subdivide the edge
/// at the `x` end and the `y` end alternately.
fn attach_ear_tracked(
    g: &Graph,
    c: &PathCover,
    x: VertexId,
    y: VertexId,
    length: usize,
) -> Result<(Graph, PathCover, Vec<VertexId>), ConstructError> {
    if length < 2 {
        return Err(ConstructError::Domain(format!(
            "ear length {length} is below 2"
        )));
    }
    if x == y {
        return Err(ConstructError::Domain("ear endpoints must differ".into()));
    }
    let (mut h, mut cover) = add_vertex_low_degree(g, c, &[x, y])?;
    let mut ear = vec![x, h.order() - 1, y];
    for k in 0..length - 2 {
        let at = if k % 2 == 0 { 0 } else { ear.len() - 2 };
        let (h2, c2) = subdivide_edge(&h, &cover, (ear[at], ear[at + 1]))?;
        ear.insert(at + 1, h2.order() - 1);
        h = h2;
        cover = c2;
    }
    Ok((h, cover, ear))
}

/// Graph spanned by an ear decomposition.
fn ear_graph(d: &EarDecomposition) -> Result<Graph, ConstructError> {
    let n = d
        .base_cycle
        .iter()
        .chain(d.ears.iter().flatten())
        .max()
        .map_or(0, |&m| m + 1);
    let mut g = Graph::empty(n);
    let k = d.base_cycle.len();
    let base = (0..k).map(|i| (d.base_cycle[i], d.base_cycle[(i + 1) % k]));
    let ears = d
        .ears
        .iter()
        .flat_map(|e| e.windows(2).map(|w| (w[0], w[1])));
    for (a, b) in base.chain(ears) {
        g.add_edge(a, b)
            .map_err(|e| ConstructError::Domain(format!("not an ear decomposition: {e}")))?;
    }
    if !d.is_valid_for(&g) {
        return Err(ConstructError::Domain("not an ear decomposition".into()));
    }
    Ok(g)
}

/// Cover of the graph of an ear decomposition whose base cycle has at least
/// four vertices and whose ears all have length at least two: the cycle
/// cover of the base, then one [`attach_ear`] per ear.
pub fn ear_cover(d: &EarDecomposition) -> Result<(Graph, PathCover), ConstructError> {
    if d.base_cycle.len() == 3 {
        return Err(ConstructError::Domain("the base cycle is K3".into()));
    }
    if d.ears.iter().any(|e| e.len() < 3) {
        return Err(ConstructError::Domain(
            "every ear needs length at least 2".into(),
        ));
    }
    let target = ear_graph(d)?;
    let k = d.base_cycle.len();
    let mut local_of = vec![usize::MAX; target.order()];
    let mut global_of: Vec<VertexId> = d.base_cycle.clone();
    for (i, &v) in d.base_cycle.iter().enumerate() {
        local_of[v] = i;
    }
    let mut g = Graph::cycle(k);
    let mut c = cycle_cover(k)?;
    for ear in &d.ears {
        let (x, y) = (local_of[ear[0]], local_of[ear[ear.len() - 1]]);
        let (h, hc, seq) = attach_ear_tracked(&g, &c, x, y, ear.len() - 1)?;
        global_of.resize(h.order(), usize::MAX);
        for (p, &local) in seq.iter().enumerate().take(ear.len() - 1).skip(1) {
            local_of[ear[p]] = local;
            global_of[local] = ear[p];
        }
        g = h;
        c = hc;
    }
    let cover = checked(&target, c.relabel(&global_of))?;
    Ok((target, cover))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::builtin_fixture;
    use crate::construct::FixtureName;

    fn c4() -> (Graph, PathCover) {
        (Graph::cycle(4), cycle_cover(4).unwrap())
    }

    #[test]
    fn pendant_on_k2() {
        let k2 = Graph::complete(2);
        let c = PathCover::from_sequences([vec![0, 1], vec![1, 0]]);
        let (h, hc) = add_vertex_low_degree(&k2, &c, &[0]).unwrap();
        assert_eq!(h, Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap());
        assert_eq!(hc.len(), 3);
    }

    #[test]
    fn degree_two_on_c4() {
        let (g, c) = c4();
        let (h, hc) = add_vertex_low_degree(&g, &c, &[0, 1]).unwrap();
        assert_eq!((h.order(), hc.len()), (5, 5));
    }

    #[test]
    fn triangle_cannot_be_reached() {
        let k2 = Graph::complete(2);
        let c = PathCover::from_sequences([vec![0, 1], vec![1, 0]]);
        assert!(matches!(
            add_vertex_low_degree(&k2, &c, &[0, 1]),
            Err(ConstructError::NoCover(_))
        ));
    }

    #[test]
    fn subdivisions() {
        let (g, c) = c4();
        let (h, hc) = subdivide_edge(&g, &c, (1, 2)).unwrap();
        assert_eq!((h.order(), h.size(), hc.len()), (5, 5, 5));
        let (h2, hc2) = subdivide_edge(&h, &hc, (4, 2)).unwrap();
        assert_eq!(hc2.len(), h2.order());
        let (k, kc) = builtin_fixture(FixtureName::K5MinusEdge);
        let (h, hc) = subdivide_edge(&k, &kc, (2, 3)).unwrap();
        assert_eq!((h.order(), hc.len()), (6, 6));
        assert!(subdivide_edge(&k, &kc, (0, 1)).is_err());
    }

    #[test]
    fn ears() {
        let (g, c) = c4();
        let (h, hc) = attach_ear(&g, &c, 0, 2, 2).unwrap();
        assert_eq!((h.order(), h.size(), hc.len()), (5, 6, 5));
        let (g5, c5) = (Graph::cycle(5), cycle_cover(5).unwrap());
        let (h, _) = attach_ear(&g5, &c5, 0, 2, 3).unwrap();
        assert_eq!(h.order(), 7);
        assert!(attach_ear(&g, &c, 0, 2, 1).is_err());
    }

    #[test]
    fn ear_decompositions() {
        // C6 plus 0 - 6 - 3
        let d = EarDecomposition {
            base_cycle: vec![0, 1, 2, 3, 4, 5],
            ears: vec![vec![0, 6, 3]],
        };
        let (g, c) = ear_cover(&d).unwrap();
        assert_eq!((g.order(), g.size(), c.len()), (7, 8, 7));
        let bare = EarDecomposition {
            base_cycle: (0..7).collect(),
            ears: vec![],
        };
        assert_eq!(ear_cover(&bare).unwrap().1, cycle_cover(7).unwrap());
        let tri = EarDecomposition {
            base_cycle: vec![0, 1, 2],
            ears: vec![vec![0, 3, 1]],
        };
        assert!(ear_cover(&tri).is_err());
    }

    #[test]
    fn ear_labels_follow_the_decomposition() {
        // base listed out of id order, a long ear with shuffled internal ids
        let d = EarDecomposition {
            base_cycle: vec![3, 0, 5, 1],
            ears: vec![vec![0, 6, 2, 4, 1]],
        };
        let (g, c) = ear_cover(&d).unwrap();
        assert!(g.has_edge(6, 2) && g.has_edge(4, 1) && g.has_edge(3, 0));
        assert_eq!(c.len(), 7);
    }
}
