//! Decomposition-driven solver.
//!
//! The graph is split into components and blocks, then 2-connected parts
//! are split along a pair of vertex-disjoint edges forming a cut. What is
//! left is reduced by peeling a vertex of degree at most two, or by removing
//! a degree-3 vertex (and adding an edge between two of its neighbours when
//! they are not adjacent) and lifting the reduced cover. Complete and
//! complete bipartite graphs use their explicit covers; everything else is
//! searched exhaustively.

use std::time::Instant;

use super::lift::{is_exception, lift_local, modes_at, reduced_graph};
use super::local::Repair;
use super::search::Meter;
use super::{complete_graph_cover, outcome, search_cover, Budget, SolveOutcome};
use crate::construct::{
    add_vertex_metered, bridge2_compose, complete_bipartite_cover, fold_blocks, ConstructError,
    Side,
};
use crate::cover::{DiPath, PathCover};
use crate::graph::{blocks, connectivity_report, Edge, Graph, VertexId};

/// Counters of one structured solve.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuredStats {
    pub block_splits: usize,
    pub bridge_splits: usize,
    pub peels: usize,
    /// Degree-3 reductions whose reduced graph was covered.
    pub lifts: usize,
    /// Lifts finished by local completion.
    pub local_lifts: usize,
    /// Lifts that fell back to searching the whole graph.
    pub global_fallbacks: usize,
    pub family_hits: usize,
    pub exhaustive_calls: usize,
}

struct Ctx {
    meter: Meter,
    stats: StructuredStats,
}

fn found(c: PathCover) -> Repair {
    Repair::Found(c)
}

pub fn solve_structured(g: &Graph, b: Budget) -> SolveOutcome {
    solve_structured_with_stats(g, b).0
}

/// [`solve_structured`] together with counters of the steps taken.
pub fn solve_structured_with_stats(g: &Graph, b: Budget) -> (SolveOutcome, StructuredStats) {
    let started = Instant::now();
    let mut ctx = Ctx {
        meter: b.meter(),
        stats: StructuredStats::default(),
    };
    let r = solve(g, &mut ctx);
    (outcome(g, r, &ctx.meter, started), ctx.stats)
}

fn solve(g: &Graph, ctx: &mut Ctx) -> Repair {
    let n = g.order();
    match n {
        0 => return found(PathCover::new(Vec::new())),
        1 => return found(PathCover::new(vec![DiPath::single(0)])),
        2 if g.size() == 1 => return found(PathCover::from_sequences([vec![0, 1], vec![1, 0]])),
        _ => {}
    }
    if ctx.meter.tripped() {
        return Repair::Tripped;
    }
    if !g.is_connected() {
        return by_components(g, ctx);
    }
    let d = blocks(g);
    if !d.cut_vertices.is_empty() {
        return by_blocks(g, ctx);
    }
    if let Some(r) = by_two_bridges(g, ctx) {
        return r;
    }
    if let Some(r) = peel(g, ctx) {
        return r;
    }
    if let Some(r) = degree_three(g, ctx) {
        return r;
    }
    if let Some(r) = family(g, ctx) {
        return r;
    }
    exhaustive(g, ctx)
}

fn exhaustive(g: &Graph, ctx: &mut Ctx) -> Repair {
    ctx.stats.exhaustive_calls += 1;
    search_cover(g, &mut ctx.meter)
}

fn by_components(g: &Graph, ctx: &mut Ctx) -> Repair {
    let mut paths = Vec::new();
    for comp in g.components() {
        match solve(&g.induced(&comp), ctx) {
            Repair::Found(c) => paths.extend(c.relabel(&comp).into_paths()),
            other => return other,
        }
    }
    found(PathCover::new(paths))
}

fn by_blocks(g: &Graph, ctx: &mut Ctx) -> Repair {
    let d = blocks(g);
    let mut sides = Vec::with_capacity(d.blocks.len());
    for b in &d.blocks {
        let sub = g.induced(b);
        match solve(&sub, ctx) {
            Repair::Found(c) => sides.push(Side::covered(sub, c)),
            Repair::Exhausted if sub.order() == 3 && sub.is_complete() => {
                sides.push(Side::Triangle)
            }
            Repair::Exhausted if sub.order() == 5 && sub.is_complete() => sides.push(Side::K5),
            // a block other than K3 or K5 without a cover: decide on the whole graph
            Repair::Exhausted => return exhaustive(g, ctx),
            Repair::Tripped => return Repair::Tripped,
        }
    }
    ctx.stats.block_splits += 1;
    match fold_blocks(&d, sides) {
        Ok(c) => found(c),
        Err(_) => exhaustive(g, ctx),
    }
}

/// A 2-edge cut with four distinct endpoints, oriented as
/// `(part of u, (u, v), (w, x))` with `u`, `w` on the first side.
fn two_bridge_cuts(g: &Graph) -> Vec<(Vec<VertexId>, Edge, Edge)> {
    let mut cuts = Vec::new();
    for cut in connectivity_report(g).edge_cuts_le2 {
        let [(a, b), (c, d)] = cut[..] else { continue };
        if a == c || a == d || b == c || b == d {
            continue;
        }
        let h = g.without_edges(&cut);
        let comps = h.components();
        if comps.len() != 2 {
            continue;
        }
        let first = comps.into_iter().find(|p| p.contains(&a)).unwrap();
        let (u, v) = (a, b);
        let (w, x) = if first.contains(&c) { (c, d) } else { (d, c) };
        cuts.push((first, (u, v), (w, x)));
    }
    cuts
}

fn by_two_bridges(g: &Graph, ctx: &mut Ctx) -> Option<Repair> {
    let n = g.order();
    for (part1, (u, v), (w, x)) in two_bridge_cuts(g) {
        let part2: Vec<VertexId> = (0..n).filter(|t| !part1.contains(t)).collect();
        let mut sides = Vec::with_capacity(2);
        for part in [&part1, &part2] {
            let sub = g.induced(part);
            match solve(&sub, ctx) {
                Repair::Found(c) => sides.push(Side::covered(sub, c)),
                Repair::Exhausted if sub.order() == 5 && sub.is_complete() => sides.push(Side::K5),
                Repair::Exhausted if sub.order() == 3 && sub.is_complete() => break,
                Repair::Exhausted => return Some(exhaustive(g, ctx)),
                Repair::Tripped => return Some(Repair::Tripped),
            }
        }
        if sides.len() < 2 {
            continue;
        }
        let at = |p: &[VertexId], t: VertexId| p.binary_search(&t).unwrap();
        let r = bridge2_compose(
            &sides[0],
            &sides[1],
            (at(&part1, u), at(&part2, v)),
            (at(&part1, w), at(&part2, x)),
        );
        if let Ok(comp) = r {
            ctx.stats.bridge_splits += 1;
            let glob: Vec<VertexId> = part1.iter().chain(&part2).copied().collect();
            return Some(found(comp.cover.relabel(&glob)));
        }
    }
    None
}

/// Maps ids of `G - v` back to `G`.
fn lift_ids(n: usize, v: VertexId) -> Vec<VertexId> {
    (0..n - 1).map(|u| if u >= v { u + 1 } else { u }).collect()
}

fn peel(g: &Graph, ctx: &mut Ctx) -> Option<Repair> {
    let n = g.order();
    for v in (0..n).filter(|&v| g.degree(v) <= 2) {
        let r = g.remove_vertex(v);
        if is_exception(&r) {
            continue;
        }
        let rc = match solve(&r, ctx) {
            Repair::Found(c) => c,
            Repair::Exhausted => return Some(exhaustive(g, ctx)),
            Repair::Tripped => return Some(Repair::Tripped),
        };
        let nbrs: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .map(|&u| if u > v { u - 1 } else { u })
            .collect();
        return Some(match add_vertex_metered(&r, &rc, &nbrs, &mut ctx.meter) {
            Ok((_, hc)) => {
                ctx.stats.peels += 1;
                // the new vertex is last in the extended graph
                let mut map = lift_ids(n, v);
                map.push(v);
                found(hc.relabel(&map))
            }
            Err(ConstructError::NoCover(_)) => Repair::Exhausted,
            Err(_) => Repair::Tripped,
        });
    }
    None
}

fn degree_three(g: &Graph, ctx: &mut Ctx) -> Option<Repair> {
    for v in (0..g.order()).filter(|&v| g.degree(v) == 3) {
        for mode in modes_at(g, v) {
            let r = reduced_graph(g, v, mode).expect("mode taken from the graph");
            if is_exception(&r) {
                continue;
            }
            let rc = match solve(&r, ctx) {
                Repair::Found(c) => c,
                Repair::Exhausted => return Some(exhaustive(g, ctx)),
                Repair::Tripped => return Some(Repair::Tripped),
            };
            ctx.stats.lifts += 1;
            if let Some(c) = lift_local(g, v, &rc, mode, &mut ctx.meter) {
                ctx.stats.local_lifts += 1;
                return Some(found(c));
            }
            if ctx.meter.tripped() {
                return Some(Repair::Tripped);
            }
            ctx.stats.global_fallbacks += 1;
            return Some(exhaustive(g, ctx));
        }
    }
    None
}

/// Two-colouring of a connected bipartite graph as sorted parts.
fn bipartition(g: &Graph) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let n = g.order();
    let mut colour = vec![u8::MAX; n];
    colour[0] = 0;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[u];
                stack.push(w);
            } else if colour[w] == colour[u] {
                return None;
            }
        }
    }
    let a: Vec<VertexId> = (0..n).filter(|&v| colour[v] == 0).collect();
    let b: Vec<VertexId> = (0..n).filter(|&v| colour[v] == 1).collect();
    Some((a, b))
}

fn family(g: &Graph, ctx: &mut Ctx) -> Option<Repair> {
    let n = g.order();
    if g.is_complete() && n != 3 && n != 5 {
        let left = Budget::new(ctx.meter.remaining().max(1), 600_000);
        if let Ok(c) = complete_graph_cover(n, left) {
            ctx.stats.family_hits += 1;
            return Some(found(c));
        }
    }
    if let Some((a, b)) = bipartition(g) {
        if g.size() == a.len() * b.len() {
            if let Ok(c) = complete_bipartite_cover(a.len(), b.len()) {
                ctx.stats.family_hits += 1;
                let glob: Vec<VertexId> = a.iter().chain(&b).copied().collect();
                return Some(found(c.relabel(&glob)));
            }
        }
    }
    None
}
