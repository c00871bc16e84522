//! Exhaustive and structured search for covers.

mod complete;
mod lift;
pub(crate) mod local;
pub(crate) mod search;
mod structured;
mod symmetry;

pub use complete::complete_graph_cover;
pub use lift::{lift_degree3, reduce_solve_lift, LiftMode, Lifted};
pub use structured::{solve_structured, solve_structured_with_stats, StructuredStats};

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::construct::ConstructError;
use crate::cover::{verify_oppdc, DiPath, PathCover};
use crate::graph::Graph;
use local::{complete_cover, Repair};
use search::{Completion, Meter, Outcome};
use symmetry::Symmetry;

/// Limits for one solver call. The search stops at whichever is reached
/// first; wall-clock time is checked every 4096 nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Budget {
    pub fn new(max_nodes: u64, max_millis: u64) -> Self {
        assert!(max_nodes > 0 && max_millis > 0, "budgets must be positive");
        Budget {
            max_nodes,
            max_millis,
        }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter::new(
            self.max_nodes,
            Instant::now().checked_add(Duration::from_millis(self.max_millis)),
        )
    }
}

impl Default for Budget {
    /// Four billion nodes or ten minutes.
    fn default() -> Self {
        Budget::new(4_000_000_000, 600_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Cover,
    Unsat,
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub cover: Option<PathCover>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graphs of order {order} are beyond the search (at most 64 vertices)")]
    TooLarge { order: usize },
    #[error("{0} has no OPPDC")]
    NoCover(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exhausted")]
    BudgetExhausted,
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Searches the whole problem on `g`; the first path is pruned by
/// automorphisms when `g` has no isolated vertex.
pub(crate) fn search_cover(g: &Graph, meter: &mut Meter) -> Repair {
    let n = g.order();
    if n == 0 {
        return Repair::Found(PathCover::new(Vec::new()));
    }
    let Some(adj) = g.adjacency_masks() else {
        return Repair::Tripped;
    };
    if g.has_isolated_vertex() {
        return complete_cover(g, &[], meter);
    }
    let sym = Symmetry::new(&adj);
    match Completion::full(&adj).solve(meter, Some(&sym)) {
        Outcome::Found(paths) => {
            Repair::Found(PathCover::new(paths.into_iter().map(DiPath::new).collect()))
        }
        Outcome::Exhausted => Repair::Exhausted,
        Outcome::Tripped => Repair::Tripped,
    }
}

/// Soundness gate on every cover the solver hands out.
pub(crate) fn assert_cover(g: &Graph, c: &PathCover) {
    let report = verify_oppdc(g, c, true).expect("solver covers stay in range");
    assert!(report.valid, "solver produced an invalid cover: {report}");
}

pub(crate) fn outcome(g: &Graph, r: Repair, meter: &Meter, started: Instant) -> SolveOutcome {
    let (status, cover) = match r {
        Repair::Found(c) => {
            assert_cover(g, &c);
            (SolveStatus::Cover, Some(c))
        }
        Repair::Exhausted => (SolveStatus::Unsat, None),
        Repair::Tripped => (SolveStatus::BudgetExhausted, None),
    };
    SolveOutcome {
        status,
        cover,
        nodes_explored: meter.nodes,
        elapsed: started.elapsed(),
    }
}

/// Depth-first search over arc assignments. `Unsat` is returned only when
/// the search space was exhausted without a budget trip.
pub fn solve_exhaustive(g: &Graph, b: Budget) -> Result<SolveOutcome, SolveError> {
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if g.order() > 64 {
        return Err(SolveError::TooLarge { order: g.order() });
    }
    let started = Instant::now();
    let mut meter = b.meter();
    let r = if g.order() == 1 {
        Repair::Found(PathCover::new(vec![DiPath::single(0)]))
    } else {
        search_cover(g, &mut meter)
    };
    Ok(outcome(g, r, &meter, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_graphs() {
        let b = Budget::default();
        assert_eq!(
            solve_exhaustive(&Graph::complete(3), b).unwrap().status,
            SolveStatus::Unsat
        );
        let k4 = solve_exhaustive(&Graph::complete(4), b).unwrap();
        assert_eq!(k4.status, SolveStatus::Cover);
        assert_eq!(k4.cover.unwrap().len(), 4);
        assert_eq!(
            solve_exhaustive(&Graph::complete(1), b).unwrap().status,
            SolveStatus::Cover
        );
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::empty(2);
        assert_eq!(
            solve_exhaustive(&g, Budget::default()).unwrap_err(),
            SolveError::Disconnected
        );
    }

    #[test]
    fn tiny_budget_is_not_unsat() {
        let r = solve_exhaustive(&Graph::complete(5), Budget::new(50, 1000)).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExhausted);
        assert!(r.cover.is_none());
    }
}
