use std::collections::HashMap;
use std::fmt;

use super::{CoverError, PathCover};
use crate::graph::{Graph, VertexId};

/// Clause of the cover definition that a candidate violates. The variant
/// order is the reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    ArcMissing,
    ArcDuplicated,
    NonSimplePath,
    NonEdgeArc,
    BeginCount,
    EndCount,
    ZeroLengthAtNonIsolated,
    ShortCycle,
    TooManyCycles,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Detail {
    Arc {
        from: VertexId,
        to: VertexId,
        count: usize,
    },
    Vertex {
        vertex: VertexId,
        count: usize,
    },
    Path {
        index: usize,
    },
    Count {
        found: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: Detail,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ViolationKind::*;
        match (&self.kind, &self.detail) {
            (ArcMissing, Detail::Arc { from, to, .. }) => write!(f, "arc {from}->{to} not covered"),
            (ArcDuplicated, Detail::Arc { from, to, count }) => {
                write!(f, "arc {from}->{to} covered {count} times")
            }
            (NonEdgeArc, Detail::Arc { from, to, .. }) => {
                write!(f, "arc {from}->{to} is not an edge")
            }
            (NonSimplePath, Detail::Path { index }) => write!(f, "path {index} repeats a vertex"),
            (BeginCount, Detail::Vertex { vertex, count }) => {
                write!(f, "vertex {vertex} begins {count} paths")
            }
            (EndCount, Detail::Vertex { vertex, count }) => {
                write!(f, "vertex {vertex} ends {count} paths")
            }
            (ZeroLengthAtNonIsolated, Detail::Path { index }) => {
                write!(f, "path {index} has length zero at a non-isolated vertex")
            }
            (ShortCycle, Detail::Path { index }) => write!(f, "cycle {index} is shorter than 3"),
            (TooManyCycles, Detail::Count { found, max }) => {
                write!(f, "{found} cycles exceed the bound {max}")
            }
            (kind, detail) => write!(f, "{kind:?}: {detail:?}"),
        }
    }
}

/// Result of a verification: valid iff there are no violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub(crate) fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        VerifyReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return write!(f, "valid");
        }
        write!(f, "invalid ({} violations)", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_vertices<'a>(
    g: &Graph,
    seqs: impl Iterator<Item = &'a [VertexId]>,
) -> Result<(), CoverError> {
    for seq in seqs {
        if let Some(&v) = seq.iter().find(|&&v| v >= g.order()) {
            return Err(CoverError::ForeignVertex {
                vertex: v,
                order: g.order(),
            });
        }
    }
    Ok(())
}

/// Arc coverage clauses shared by the path and cycle verifiers.
pub(crate) fn arc_violations(
    g: &Graph,
    arcs: impl Iterator<Item = (VertexId, VertexId)>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut counts: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut foreign: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (a, b) in arcs {
        if g.has_edge(a, b) {
            *counts.entry((a, b)).or_default() += 1;
        } else {
            *foreign.entry((a, b)).or_default() += 1;
        }
    }
    for (from, to) in g.arcs() {
        match counts.get(&(from, to)).copied().unwrap_or(0) {
            1 => {}
            0 => out.push(Violation {
                kind: ViolationKind::ArcMissing,
                detail: Detail::Arc { from, to, count: 0 },
            }),
            count => out.push(Violation {
                kind: ViolationKind::ArcDuplicated,
                detail: Detail::Arc { from, to, count },
            }),
        }
    }
    for ((from, to), count) in foreign {
        out.push(Violation {
            kind: ViolationKind::NonEdgeArc,
            detail: Detail::Arc { from, to, count },
        });
    }
    out
}

/// Checks `c` against the OPPDC definition on `g`: every arc of the
/// symmetric orientation covered exactly once, every path simple and made of
/// edges, every vertex beginning and ending exactly one path. With `strict`,
/// zero-length paths are only accepted at isolated vertices.
///
/// Vertex ids outside `g` are an input error rather than a violation.
pub fn verify_oppdc(g: &Graph, c: &PathCover, strict: bool) -> Result<VerifyReport, CoverError> {
    check_vertices(g, c.paths().iter().map(|p| p.vertices()))?;
    let mut violations = arc_violations(g, c.paths().iter().flat_map(|p| p.arcs()));
    for (index, p) in c.paths().iter().enumerate() {
        if !p.is_simple() {
            violations.push(Violation {
                kind: ViolationKind::NonSimplePath,
                detail: Detail::Path { index },
            });
        }
        if strict && p.is_empty() && !g.is_isolated(p.first()) {
            violations.push(Violation {
                kind: ViolationKind::ZeroLengthAtNonIsolated,
                detail: Detail::Path { index },
            });
        }
    }
    for vertex in 0..g.order() {
        let count = c.begin_count(vertex);
        if count != 1 {
            violations.push(Violation {
                kind: ViolationKind::BeginCount,
                detail: Detail::Vertex { vertex, count },
            });
        }
        let count = c.end_count(vertex);
        if count != 1 {
            violations.push(Violation {
                kind: ViolationKind::EndCount,
                detail: Detail::Vertex { vertex, count },
            });
        }
    }
    Ok(VerifyReport::from_violations(violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        // letters u,v,w,x,y -> 0..4; triangles uvw and wxy share w
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn accepts_the_two_triangle_cover() {
        // {uwxy, ywvu, xw, wuv, vwyx}
        let c = PathCover::from_sequences([
            vec![0, 2, 3, 4],
            vec![4, 2, 1, 0],
            vec![3, 2],
            vec![2, 0, 1],
            vec![1, 2, 4, 3],
        ]);
        let r = verify_oppdc(&two_triangles(), &c, true).unwrap();
        assert!(r.valid, "{r}");
    }

    #[test]
    fn isolated_vertex_zero_length_path() {
        let c = PathCover::from_sequences([vec![0]]);
        assert!(verify_oppdc(&Graph::empty(1), &c, true).unwrap().valid);
        // the same path on a non-isolated vertex is rejected in strict mode only
        let g = Graph::complete(2);
        let c = PathCover::from_sequences([vec![0], vec![1], vec![0, 1], vec![1, 0]]);
        let strict = verify_oppdc(&g, &c, true).unwrap();
        assert!(strict.has(ViolationKind::ZeroLengthAtNonIsolated));
        let lenient = verify_oppdc(&g, &c, false).unwrap();
        assert!(!lenient.has(ViolationKind::ZeroLengthAtNonIsolated));
    }

    #[test]
    fn rotated_triangle_paths_duplicate_and_miss_arcs() {
        let c = PathCover::from_sequences([vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        let r = verify_oppdc(&Graph::complete(3), &c, true).unwrap();
        assert!(!r.valid);
        assert_eq!(
            r.first(),
            Some(&Violation {
                kind: ViolationKind::ArcMissing,
                detail: Detail::Arc {
                    from: 0,
                    to: 2,
                    count: 0
                }
            })
        );
        let missing = r
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::ArcMissing)
            .count();
        let dup = r
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::ArcDuplicated)
            .count();
        assert_eq!((missing, dup), (3, 3));
        assert!(!r.has(ViolationKind::BeginCount));
    }

    #[test]
    fn reports_structure_violations() {
        let g = Graph::path(3);
        let c = PathCover::from_sequences([vec![0, 2], vec![1, 0, 1]]);
        let r = verify_oppdc(&g, &c, true).unwrap();
        assert!(r.has(ViolationKind::NonEdgeArc));
        assert!(r.has(ViolationKind::NonSimplePath));
        assert!(r.has(ViolationKind::BeginCount));
        assert!(r.has(ViolationKind::EndCount));
        // sorted by clause
        let kinds: Vec<_> = r.violations.iter().map(|v| v.kind).collect();
        let mut sorted = kinds.clone();
        sorted.sort();
        assert_eq!(kinds, sorted);
    }

    #[test]
    fn foreign_vertex_is_an_input_error() {
        let c = PathCover::from_sequences([vec![0, 5]]);
        assert_eq!(
            verify_oppdc(&Graph::complete(2), &c, true),
            Err(CoverError::ForeignVertex {
                vertex: 5,
                order: 2
            })
        );
    }
}
