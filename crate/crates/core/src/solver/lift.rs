//! Lifting a cover of a reduced graph back over a degree-3 vertex.

use std::time::Instant;

use super::local::{repair_near, Repair};
use super::search::Meter;
use super::{assert_cover, search_cover, solve_structured, Budget, SolveError, SolveStatus};
use crate::construct::ConstructError;
use crate::cover::{verify_oppdc, DiPath, PathCover};
use crate::graph::{Graph, VertexId};

/// How the reduced graph was obtained from `G` and a degree-3 vertex `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftMode {
    /// `N(v)` spans a triangle; the reduced graph is `G - v`.
    Triangle,
    /// `x`, `z` are non-adjacent neighbours of `v` (ids in `G`); the reduced
    /// graph is `G - v + xz`.
    AddedEdge(VertexId, VertexId),
}

#[derive(Debug, Clone)]
pub struct Lifted {
    pub cover: PathCover,
    /// True when the local completion failed and the cover came from a
    /// search over the whole graph.
    pub global_fallback: bool,
    pub nodes_explored: u64,
}

/// Search limits of the local lift.
const LOCAL_EXTRA: usize = 3;
const LOCAL_PER_TRY: u64 = 200_000;

/// The reduced graph for `v` in `mode`, in the labels of `G - v` (ids above
/// `v` drop by one).
pub(crate) fn reduced_graph(g: &Graph, v: VertexId, mode: LiftMode) -> Result<Graph, SolveError> {
    if v >= g.order() || g.degree(v) != 3 {
        return Err(SolveError::Precondition(format!(
            "vertex {v} does not have degree 3"
        )));
    }
    let nb = g.neighbors(v);
    let down = |u: VertexId| if u > v { u - 1 } else { u };
    match mode {
        LiftMode::Triangle => {
            if !(g.has_edge(nb[0], nb[1]) && g.has_edge(nb[0], nb[2]) && g.has_edge(nb[1], nb[2])) {
                return Err(SolveError::Precondition(format!(
                    "N({v}) is not a triangle"
                )));
            }
            Ok(g.remove_vertex(v))
        }
        LiftMode::AddedEdge(x, z) => {
            if x == z || !nb.contains(&x) || !nb.contains(&z) || g.has_edge(x, z) {
                return Err(SolveError::Precondition(format!(
                    "{x} and {z} are not non-adjacent neighbours of {v}"
                )));
            }
            Ok(g.remove_vertex(v)
                .with_edge(down(x), down(z))
                .expect("checked non-adjacent"))
        }
    }
}

/// The reductions available at `v`: the triangle when `N(v)` is one,
/// otherwise every non-adjacent pair of neighbours.
pub(crate) fn modes_at(g: &Graph, v: VertexId) -> Vec<LiftMode> {
    let nb = g.neighbors(v);
    let mut pairs = Vec::new();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if !g.has_edge(nb[i], nb[j]) {
                pairs.push(LiftMode::AddedEdge(nb[i], nb[j]));
            }
        }
    }
    if pairs.is_empty() {
        vec![LiftMode::Triangle]
    } else {
        pairs
    }
}

/// Local part of the lift: keep the reduced cover away from `v` and search
/// for the rest. In added-edge mode the paths through `xz` are always freed.
pub(crate) fn lift_local(
    g: &Graph,
    v: VertexId,
    reduced: &PathCover,
    mode: LiftMode,
    meter: &mut Meter,
) -> Option<PathCover> {
    let up: Vec<VertexId> = (0..g.order() - 1)
        .map(|u| if u >= v { u + 1 } else { u })
        .collect();
    let base: Vec<DiPath> = reduced.paths().iter().map(|p| p.relabel(&up)).collect();
    let mandatory: Vec<usize> = match mode {
        LiftMode::Triangle => Vec::new(),
        LiftMode::AddedEdge(x, z) => (0..base.len())
            .filter(|&i| base[i].arcs().any(|a| a == (x, z) || a == (z, x)))
            .collect(),
    };
    let mut seeds = vec![v];
    seeds.extend_from_slice(g.neighbors(v));
    repair_near(
        g,
        &base,
        &mandatory,
        &seeds,
        LOCAL_EXTRA,
        LOCAL_PER_TRY,
        meter,
    )
}

/// Extends `reduced_cover`, a cover of the reduced graph of `mode` (labels
/// of `G - v`), to a cover of `g`. Local completion around `v` is tried
/// first; if it fails the whole graph is searched.
pub fn lift_degree3(
    g: &Graph,
    v: VertexId,
    reduced_cover: &PathCover,
    mode: LiftMode,
    budget: Budget,
) -> Result<Lifted, SolveError> {
    let reduced = reduced_graph(g, v, mode)?;
    let report = verify_oppdc(&reduced, reduced_cover, true)
        .map_err(|e| ConstructError::InvalidInput(e.to_string()))?;
    if !report.valid {
        return Err(ConstructError::InvalidInput(report.to_string()).into());
    }
    let mut meter = budget.meter();
    if let Some(cover) = lift_local(g, v, reduced_cover, mode, &mut meter) {
        assert_cover(g, &cover);
        return Ok(Lifted {
            cover,
            global_fallback: false,
            nodes_explored: meter.nodes,
        });
    }
    global(g, &mut meter)
}

fn global(g: &Graph, meter: &mut Meter) -> Result<Lifted, SolveError> {
    match search_cover(g, meter) {
        Repair::Found(cover) => {
            assert_cover(g, &cover);
            Ok(Lifted {
                cover,
                global_fallback: true,
                nodes_explored: meter.nodes,
            })
        }
        Repair::Exhausted => Err(SolveError::NoCover(format!("{g:?}"))),
        Repair::Tripped => Err(SolveError::BudgetExhausted),
    }
}

/// Picks the lowest degree-3 vertex and reduction whose reduced graph is
/// neither `K3` nor `K5`, solves the reduced graph and lifts. Without a
/// usable reduction the whole graph is searched and counted as a fallback.
pub fn reduce_solve_lift(g: &Graph, budget: Budget) -> Result<Lifted, SolveError> {
    let started = Instant::now();
    for v in (0..g.order()).filter(|&v| g.degree(v) == 3) {
        for mode in modes_at(g, v) {
            let r = reduced_graph(g, v, mode)?;
            if is_exception(&r) {
                continue;
            }
            let sub = solve_structured(&r, budget);
            if sub.status != SolveStatus::Cover {
                continue;
            }
            let spent = Budget::new(
                budget.max_nodes.saturating_sub(sub.nodes_explored).max(1),
                budget
                    .max_millis
                    .saturating_sub(started.elapsed().as_millis() as u64)
                    .max(1),
            );
            let mut lifted = lift_degree3(g, v, sub.cover.as_ref().unwrap(), mode, spent)?;
            lifted.nodes_explored += sub.nodes_explored;
            return Ok(lifted);
        }
    }
    global(g, &mut budget.meter())
}

/// `K3` or `K5`.
pub(crate) fn is_exception(g: &Graph) -> bool {
    (g.order() == 3 || g.order() == 5) && g.is_complete()
}
