//! Explicit cover constructions and compositions. Every public constructor
//! verifies its output in strict mode before returning it.

mod blocks;
mod cycles;
mod families;
mod fixtures;
mod glue;
mod surgery;

pub use blocks::block_graph_cover;
pub use cycles::{attach_cycle, cycle_partition_cover};
pub use families::{complete_bipartite_cover, cycle_cover, product_cover};
pub use fixtures::{builtin_fixture, FixtureName};
pub use glue::{bridge2_compose, glue_at_vertex, Composite, Side};
pub use surgery::{add_vertex_low_degree, attach_ear, ear_cover, subdivide_edge};

pub(crate) use blocks::fold_blocks;
pub(crate) use surgery::add_vertex_metered;

use thiserror::Error;

use crate::cover::{verify_oppdc, PathCover};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{0} has no OPPDC")]
    NoCover(String),
    #[error("{0}")]
    Domain(String),
    #[error("input cover is not valid: {0}")]
    InvalidInput(String),
    #[error("construction produced an invalid cover: {0}")]
    Invalid(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("intersection pattern not covered: {0}")]
    CaseNotCovered(String),
    #[error("completion failed within budget: {0}")]
    Completion(String),
}

/// Gate applied to every constructed cover.
pub(crate) fn checked(g: &Graph, c: PathCover) -> Result<PathCover, ConstructError> {
    let report = verify_oppdc(g, &c, true).map_err(|e| ConstructError::Invalid(e.to_string()))?;
    if report.valid {
        Ok(c)
    } else {
        Err(ConstructError::Invalid(format!("{report}; cover {c:?}")))
    }
}

/// Precondition check for covers handed in by callers.
pub(crate) fn require_valid(g: &Graph, c: &PathCover) -> Result<(), ConstructError> {
    let report =
        verify_oppdc(g, c, true).map_err(|e| ConstructError::InvalidInput(e.to_string()))?;
    if report.valid {
        Ok(())
    } else {
        Err(ConstructError::InvalidInput(report.to_string()))
    }
}
