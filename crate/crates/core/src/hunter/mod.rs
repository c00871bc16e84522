//! Minimal-counterexample filtering.
//!
//! A smallest connected graph other than `K3` and `K5` without a cover would
//! have minimum degree at least 4, be 2-connected and 3-edge-connected, have
//! at least `2n` edges, a vertex of even degree and two adjacent vertices of
//! degree above two, no decomposition into a cycle of length at least 4 and
//! ears of length at least 2, no qualifying cycle partition, and would not
//! be complete. [`filter_minimal_counterexample`] checks these in that order
//! and keeps evidence for the first one that fails.

mod scan;

pub use scan::{scan_stream, EntryVerdict, ScanEntry, ScanSummary};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cover::{emit_cover, verify_oppdc, PathCover};
use crate::graph::{
    blocks, connectivity_report, disconnects, find_cycle_partition, find_ear_decomposition,
    CycleDecomposition, EarDecomposition, Edge, Graph, Search, VertexId,
};
use crate::solver::{solve_structured, Budget, SolveStatus};

/// Node cap of the ear and cycle-partition searches. Fixed so that only the
/// final rule depends on the budget.
const DECOMPOSITION_NODES: u64 = 2_000_000;

/// Rules that a minimal counterexample would also have to pass but that are
/// not checked here.
pub const RULES_NOT_IMPLEMENTED: &[&str] = &["union-of-two-trees"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    MinDegree,
    CutVertex,
    TwoEdgeCut,
    Sparse2Conn,
    AllOddDegrees,
    LowDegreePattern,
    LongEarDecomposition,
    CyclePartition,
    CompleteGraph,
    SolvedDirectly,
}

impl Rule {
    /// Application order.
    pub const ALL: [Rule; 10] = [
        Rule::MinDegree,
        Rule::CutVertex,
        Rule::TwoEdgeCut,
        Rule::Sparse2Conn,
        Rule::AllOddDegrees,
        Rule::LowDegreePattern,
        Rule::LongEarDecomposition,
        Rule::CyclePartition,
        Rule::CompleteGraph,
        Rule::SolvedDirectly,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::MinDegree => "min-degree",
            Rule::CutVertex => "cut-vertex",
            Rule::TwoEdgeCut => "two-edge-cut",
            Rule::Sparse2Conn => "sparse-2conn",
            Rule::AllOddDegrees => "all-odd-degrees",
            Rule::LowDegreePattern => "low-degree-pattern",
            Rule::LongEarDecomposition => "long-ear-decomposition",
            Rule::CyclePartition => "cycle-partition",
            Rule::CompleteGraph => "complete-graph",
            Rule::SolvedDirectly => "solved-directly",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown rule {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A vertex of degree at most 3.
    LowDegree {
        vertex: VertexId,
        degree: usize,
    },
    CutVertex(VertexId),
    /// A bridge or a pair of edges whose removal disconnects.
    EdgeCut(Vec<Edge>),
    Counts {
        order: usize,
        size: usize,
    },
    Degrees(Vec<usize>),
    Ears(EarDecomposition),
    Cycles(CycleDecomposition),
    Complete(usize),
    Cover(PathCover),
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::LowDegree { vertex, degree } => json!({"vertex": vertex, "degree": degree}),
            Witness::CutVertex(v) => json!({"cut_vertex": v}),
            Witness::EdgeCut(e) => json!({"edges": e}),
            Witness::Counts { order, size } => json!({"order": order, "size": size}),
            Witness::Degrees(d) => json!({"degrees": d}),
            Witness::Ears(d) => json!({"base_cycle": d.base_cycle, "ears": d.ears}),
            Witness::Cycles(d) => json!({"cycles": d.cycles}),
            Witness::Complete(n) => json!({"complete_order": n}),
            Witness::Cover(c) => json!({"cover": emit_cover(c)}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterVerdict {
    /// `None` for a survivor of every implemented rule.
    pub eliminated_by: Option<Rule>,
    pub witness: Option<Witness>,
}

impl FilterVerdict {
    fn eliminated(rule: Rule, witness: Witness) -> Self {
        FilterVerdict {
            eliminated_by: Some(rule),
            witness: Some(witness),
        }
    }

    pub fn is_survivor(&self) -> bool {
        self.eliminated_by.is_none()
    }

    /// Re-checks the witness against `g` and its rule. Survivors pass.
    pub fn revalidate(&self, g: &Graph) -> bool {
        let (Some(rule), Some(w)) = (self.eliminated_by, &self.witness) else {
            return self.eliminated_by.is_none() && self.witness.is_none();
        };
        let n = g.order();
        match (rule, w) {
            (Rule::MinDegree, Witness::LowDegree { vertex, degree }) => {
                *vertex < n && g.degree(*vertex) == *degree && *degree <= 3
            }
            (Rule::CutVertex, Witness::CutVertex(v)) => {
                *v < n && g.remove_vertex(*v).components().len() > g.components().len()
            }
            (Rule::TwoEdgeCut, Witness::EdgeCut(e)) => {
                (1..=2).contains(&e.len())
                    && e.iter().all(|&(a, b)| g.has_edge(a, b))
                    && disconnects(g, e)
            }
            (Rule::Sparse2Conn, Witness::Counts { order, size }) => {
                *order == n && *size == g.size() && *size + 1 <= 2 * n
            }
            (Rule::AllOddDegrees, Witness::Degrees(d)) => {
                *d == degrees(g) && d.iter().all(|x| x % 2 == 1)
            }
            (Rule::LowDegreePattern, Witness::Degrees(d)) => {
                *d == degrees(g) && g.edges().all(|(a, b)| d[a] <= 2 || d[b] <= 2)
            }
            (Rule::LongEarDecomposition, Witness::Ears(d)) => {
                d.is_valid_for(g) && d.has_only_long_ears()
            }
            (Rule::CyclePartition, Witness::Cycles(d)) => d.is_valid_for(g),
            (Rule::CompleteGraph, Witness::Complete(k)) => *k == n && g.is_complete(),
            (Rule::SolvedDirectly, Witness::Cover(c)) => {
                verify_oppdc(g, c, true).map(|r| r.valid).unwrap_or(false)
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HunterError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("{0} is a known exception")]
    KnownException(String),
}

fn degrees(g: &Graph) -> Vec<usize> {
    (0..g.order()).map(|v| g.degree(v)).collect()
}

/// First rule (in [`Rule::ALL`] order) showing that `g` is not a minimal
/// counterexample. The budget only limits the final direct solve.
pub fn filter_minimal_counterexample(g: &Graph, b: Budget) -> Result<FilterVerdict, HunterError> {
    let n = g.order();
    if !g.is_connected() {
        return Err(HunterError::Disconnected);
    }
    if (n == 3 || n == 5) && g.is_complete() {
        return Err(HunterError::KnownException(format!("K{n}")));
    }
    let deg = degrees(g);
    if let Some(v) = (0..n).min_by_key(|&v| deg[v]).filter(|&v| deg[v] <= 3) {
        return Ok(FilterVerdict::eliminated(
            Rule::MinDegree,
            Witness::LowDegree {
                vertex: v,
                degree: deg[v],
            },
        ));
    }
    if let Some(&v) = blocks(g).cut_vertices.first() {
        return Ok(FilterVerdict::eliminated(
            Rule::CutVertex,
            Witness::CutVertex(v),
        ));
    }
    if let Some(cut) = connectivity_report(g).edge_cuts_le2.into_iter().next() {
        return Ok(FilterVerdict::eliminated(
            Rule::TwoEdgeCut,
            Witness::EdgeCut(cut),
        ));
    }
    let m = g.size();
    if m < 2 * n {
        return Ok(FilterVerdict::eliminated(
            Rule::Sparse2Conn,
            Witness::Counts { order: n, size: m },
        ));
    }
    if deg.iter().all(|d| d % 2 == 1) {
        return Ok(FilterVerdict::eliminated(
            Rule::AllOddDegrees,
            Witness::Degrees(deg),
        ));
    }
    if g.edges().all(|(a, b)| deg[a] <= 2 || deg[b] <= 2) {
        return Ok(FilterVerdict::eliminated(
            Rule::LowDegreePattern,
            Witness::Degrees(deg),
        ));
    }
    if let Ok(Search::Found(d)) = find_ear_decomposition(g, true, DECOMPOSITION_NODES) {
        return Ok(FilterVerdict::eliminated(
            Rule::LongEarDecomposition,
            Witness::Ears(d),
        ));
    }
    if let Search::Found(d) = find_cycle_partition(g, DECOMPOSITION_NODES) {
        return Ok(FilterVerdict::eliminated(
            Rule::CyclePartition,
            Witness::Cycles(d),
        ));
    }
    if g.is_complete() {
        return Ok(FilterVerdict::eliminated(
            Rule::CompleteGraph,
            Witness::Complete(n),
        ));
    }
    let out = solve_structured(g, b);
    if out.status == SolveStatus::Cover {
        let c = out.cover.expect("cover status carries a cover");
        return Ok(FilterVerdict::eliminated(
            Rule::SolvedDirectly,
            Witness::Cover(c),
        ));
    }
    Ok(FilterVerdict {
        eliminated_by: None,
        witness: None,
    })
}
