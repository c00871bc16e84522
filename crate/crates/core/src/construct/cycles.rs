//! Attaching a cycle to a covered graph, and covers from cycle partitions.

use super::glue::{glue_at_vertex, Side};
use super::{checked, cycle_cover, require_valid, ConstructError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{CycleDecomposition, Graph, VertexId};

/// `gp` plus the vertices and edges of `cyc`.
fn extend_with_cycle(gp: &Graph, cyc: &[VertexId], fresh: usize) -> Result<Graph, ConstructError> {
    let mut h = gp.clone();
    for _ in 0..fresh {
        h.add_vertex();
    }
    let k = cyc.len();
    for i in 0..k {
        h.add_edge(cyc[i], cyc[(i + 1) % k]).map_err(|e| {
            ConstructError::Domain(format!("cycle edge clashes with the graph: {e}"))
        })?;
    }
    Ok(h)
}

/// Adds the cycle `cyc` to the covered graph `gp`. Vertices of `cyc` below
/// `gp.order()` are shared with `gp`; the others are new and must be
/// exactly `gp.order()..gp.order() + f`. At least two vertices must be new
/// and no edge of the cycle may already be present.
///
/// One shared vertex is a glue at that vertex. With two or more, a pair of
/// new vertices `v_i`, `v_j` is chosen such that the stretch from `v_j`
/// forward to `v_i` holds two shared vertices; `v_r` is the first of them
/// after `v_j` and `v_s` the last before `v_i`. The only pattern without
/// such a pair is the 4-cycle alternating between shared and new vertices,
/// which has its own surgery.
pub fn attach_cycle(
    gp: &Graph,
    cp: &PathCover,
    cyc: &[VertexId],
) -> Result<(Graph, PathCover), ConstructError> {
    require_valid(gp, cp)?;
    let n = gp.order();
    let k = cyc.len();
    let mut sorted = cyc.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return Err(ConstructError::Domain("cycle repeats a vertex".into()));
    }
    let new: Vec<VertexId> = sorted.iter().copied().filter(|&v| v >= n).collect();
    let f = new.len();
    if new.iter().enumerate().any(|(i, &v)| v != n + i) {
        return Err(ConstructError::Domain(format!(
            "new cycle vertices must be numbered from {n} without gaps"
        )));
    }
    if f < 2 {
        return Err(ConstructError::Domain(
            "the cycle needs at least two new vertices".into(),
        ));
    }
    let shared: Vec<usize> = (0..k).filter(|&p| cyc[p] < n).collect();
    if k < 4 && !(k == 3 && shared.len() == 1) {
        return Err(ConstructError::Domain(format!(
            "cannot attach a cycle of length {k}"
        )));
    }
    let h = extend_with_cycle(gp, cyc, f)?;

    let paths = match shared.len() {
        0 => {
            let mut paths = cp.paths().to_vec();
            paths.extend(cycle_cover(k)?.relabel(cyc).into_paths());
            paths
        }
        1 => {
            let p = shared[0];
            let side = if k == 3 {
                Side::Triangle
            } else {
                Side::covered(Graph::cycle(k), cycle_cover(k)?)
            };
            let r = glue_at_vertex(&Side::covered(gp.clone(), cp.clone()), cyc[p], &side, p)?;
            let mut to_target: Vec<VertexId> = (0..r.graph.order()).collect();
            for (i, &at) in r.side2_map.iter().enumerate() {
                to_target[at] = cyc[i];
            }
            r.cover.relabel(&to_target).into_paths()
        }
        _ if k == 4 && f == 2 && (shared == [0, 2] || shared == [1, 3]) => {
            let a = shared[0];
            let v = |t: usize| cyc[(a + t - 1) % 4];
            alternating_square(cp, [v(1), v(2), v(3), v(4)])
        }
        _ => first_case(cp, cyc, n)?,
    };
    Ok((h.clone(), checked(&h, PathCover::new(paths))?))
}

fn take(paths: &mut Vec<DiPath>, pick: impl Fn(&DiPath) -> bool) -> DiPath {
    let i = paths
        .iter()
        .position(pick)
        .expect("valid cover has the path");
    paths.remove(i)
}

/// `C = [v1, v2, v3, v4]` with `v1`, `v3` shared.
fn alternating_square(cp: &PathCover, [v1, v2, v3, v4]: [VertexId; 4]) -> Vec<DiPath> {
    let mut paths = cp.paths().to_vec();
    let from_v1 = take(&mut paths, |p| p.first() == v1);
    paths.push(DiPath::new(vec![v1, v4, v3, v2]));
    paths.push(DiPath::new(vec![v4, v1, v2, v3]));
    if from_v1.last() == v3 {
        // the same path leaves v1 and enters v3
        paths.push(from_v1.after(v2).then(v4));
    } else {
        let into_v3 = take(&mut paths, |p| p.last() == v3);
        paths.push(from_v1.after(v2));
        paths.push(into_v3.then(v4));
    }
    paths
}

fn first_case(cp: &PathCover, cyc: &[VertexId], n: usize) -> Result<Vec<DiPath>, ConstructError> {
    let k = cyc.len();
    let is_new = |p: usize| cyc[p] >= n;
    let fwd = |p: usize| (p + 1) % k;
    let back = |p: usize| (p + k - 1) % k;
    let new_pos: Vec<usize> = (0..k).filter(|&p| is_new(p)).collect();
    let mut choice = None;
    'search: for &j in &new_pos {
        for &i in &new_pos {
            if i == j {
                continue;
            }
            let mut between = Vec::new();
            let mut p = fwd(j);
            while p != i {
                if !is_new(p) {
                    between.push(p);
                }
                p = fwd(p);
            }
            if between.len() >= 2 {
                choice = Some((i, j, between[0], between[between.len() - 1]));
                break 'search;
            }
        }
    }
    let Some((i, j, r, s)) = choice else {
        return Err(ConstructError::CaseNotCovered(format!("cycle {cyc:?}")));
    };
    let walk = |from: usize, to: usize, step: &dyn Fn(usize) -> usize| {
        let mut seq = vec![cyc[from]];
        let mut p = from;
        while p != to {
            p = step(p);
            seq.push(cyc[p]);
        }
        DiPath::new(seq)
    };
    let mut paths = cp.paths().to_vec();
    let from_r = take(&mut paths, |p| p.first() == cyc[r]);
    let from_s = take(&mut paths, |p| p.first() == cyc[s]);
    let p_i = walk(i, s, &back).join(&from_s);
    let p_s = walk(s, i, &back);
    paths.push(walk(j, r, &fwd).join(&from_r));
    paths.push(walk(r, j, &fwd));
    // split the two backward paths at every new vertex other than v_j
    let split_at = |v: VertexId| v >= n && v != cyc[j];
    for p in [p_i, p_s] {
        let s = p.vertices();
        let mut start = 0;
        for t in 1..s.len() - 1 {
            if split_at(s[t]) {
                paths.push(DiPath::new(s[start..=t].to_vec()));
                start = t;
            }
        }
        paths.push(DiPath::new(s[start..].to_vec()));
    }
    Ok(paths)
}

/// Cover of the graph partitioned by `d`: the cycle cover of the first
/// cycle, then [`attach_cycle`] for every later one.
pub fn cycle_partition_cover(d: &CycleDecomposition) -> Result<(Graph, PathCover), ConstructError> {
    let Some(first) = d.cycles.first() else {
        return Err(ConstructError::Domain("empty cycle partition".into()));
    };
    if first.len() < 4 {
        return Err(ConstructError::Domain(
            "the first cycle must have length at least 4".into(),
        ));
    }
    let n = d.cycles.iter().flatten().max().map_or(0, |&m| m + 1);
    let mut target = Graph::empty(n);
    for c in &d.cycles {
        for t in 0..c.len() {
            target
                .add_edge(c[t], c[(t + 1) % c.len()])
                .map_err(|e| ConstructError::Domain(format!("not a cycle partition: {e}")))?;
        }
    }
    if !d.is_valid_for(&target) {
        return Err(ConstructError::Domain("not a valid cycle partition".into()));
    }
    let mut local_of = vec![usize::MAX; n];
    let mut global_of = Vec::new();
    for c in &d.cycles {
        for &v in c {
            if local_of[v] == usize::MAX {
                local_of[v] = global_of.len();
                global_of.push(v);
            }
        }
    }
    let k = first.len();
    let mut g = Graph::cycle(k);
    let mut cover = cycle_cover(k)?;
    for c in &d.cycles[1..] {
        let local: Vec<VertexId> = c.iter().map(|&v| local_of[v]).collect();
        let (h, hc) = attach_cycle(&g, &cover, &local)?;
        g = h;
        cover = hc;
    }
    if g.order() != n {
        return Err(ConstructError::Domain(
            "cycle partition leaves vertices uncovered".into(),
        ));
    }
    let cover = checked(&target, cover.relabel(&global_of))?;
    Ok((target, cover))
}
