//! Small oriented cycle double covers and the apex correspondence with
//! path covers: a path `u ~> v` of an OPPDC of `G` becomes the directed
//! cycle `a -> u ~> v -> a` in `G` plus a universal vertex `a`.

use std::collections::HashSet;

use super::verify::{arc_violations, check_vertices, Detail, Violation, ViolationKind};
use super::{verify_oppdc, CoverError, DiPath, PathCover, VerifyReport};
use crate::graph::{Graph, VertexId};

/// Directed cycle as a vertex sequence; the closing arc is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiCycle(Vec<VertexId>);

impl DiCycle {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        DiCycle(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.0.iter().all(|v| seen.insert(*v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleCover {
    pub cycles: Vec<DiCycle>,
}

impl CycleCover {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Every arc of `g` covered exactly once by simple directed cycles of length
/// at least 3, and at most `max_count` cycles.
pub fn verify_socdc(
    g: &Graph,
    cycles: &CycleCover,
    max_count: usize,
) -> Result<VerifyReport, CoverError> {
    check_vertices(g, cycles.cycles.iter().map(|c| c.vertices()))?;
    let mut violations = arc_violations(g, cycles.cycles.iter().flat_map(|c| c.arcs()));
    for (index, c) in cycles.cycles.iter().enumerate() {
        if c.len() < 3 {
            violations.push(Violation {
                kind: ViolationKind::ShortCycle,
                detail: Detail::Path { index },
            });
        }
        if !c.is_simple() {
            violations.push(Violation {
                kind: ViolationKind::NonSimplePath,
                detail: Detail::Path { index },
            });
        }
    }
    if cycles.len() > max_count {
        violations.push(Violation {
            kind: ViolationKind::TooManyCycles,
            detail: Detail::Count {
                found: cycles.len(),
                max: max_count,
            },
        });
    }
    Ok(VerifyReport::from_violations(violations))
}

/// Adds a universal apex vertex (id `|V(g)|`) and closes every path through
/// it. The result has exactly `|V(g)|` cycles.
pub fn oppdc_to_socdc(
    g: &Graph,
    c: &PathCover,
) -> Result<(Graph, CycleCover, VertexId), CoverError> {
    let report = verify_oppdc(g, c, true)?;
    if !report.valid {
        return Err(CoverError::Invalid(report.to_string()));
    }
    if let Some(p) = c.paths().iter().find(|p| p.is_empty()) {
        return Err(CoverError::ZeroLengthPath(p.first()));
    }
    let mut apex_graph = g.clone();
    let apex = apex_graph.add_vertex();
    for v in 0..g.order() {
        apex_graph.add_edge(v, apex).expect("apex is new");
    }
    let cycles = c
        .paths()
        .iter()
        .map(|p| {
            let mut seq = Vec::with_capacity(p.vertices().len() + 1);
            seq.push(apex);
            seq.extend_from_slice(p.vertices());
            DiCycle(seq)
        })
        .collect();
    Ok((apex_graph, CycleCover { cycles }, apex))
}

/// Inverse of [`oppdc_to_socdc`]: deletes `apex` from every cycle. Every
/// cycle must pass through the apex. Vertex ids above `apex` shift down by
/// one, matching [`Graph::remove_vertex`].
pub fn socdc_to_oppdc(
    apex_graph: &Graph,
    apex: VertexId,
    cycles: &CycleCover,
) -> Result<PathCover, CoverError> {
    let n = apex_graph.order();
    if apex >= n {
        return Err(CoverError::ForeignVertex {
            vertex: apex,
            order: n,
        });
    }
    if apex_graph.degree(apex) != n - 1 {
        return Err(CoverError::ApexNotUniversal(apex));
    }
    // n - 1 cycles through the apex are needed for its 2(n - 1) arcs, so with
    // the size bound every cycle of a valid cover meets the apex; a cycle
    // avoiding it is reported as such before the full check.
    if let Some(i) = cycles
        .cycles
        .iter()
        .position(|c| !c.vertices().contains(&apex))
    {
        return Err(CoverError::CycleMissesApex(i));
    }
    let report = verify_socdc(apex_graph, cycles, n - 1)?;
    if !report.valid {
        return Err(CoverError::Invalid(report.to_string()));
    }
    let shift = |v: VertexId| if v > apex { v - 1 } else { v };
    let mut paths = Vec::with_capacity(cycles.len());
    for c in &cycles.cycles {
        let pos = c
            .vertices()
            .iter()
            .position(|&v| v == apex)
            .expect("checked above");
        let k = c.len();
        let seq: Vec<VertexId> = (1..k).map(|j| shift(c.vertices()[(pos + j) % k])).collect();
        paths.push(DiPath::new(seq));
    }
    let cover = PathCover::new(paths);
    let base = apex_graph.remove_vertex(apex);
    let report = verify_oppdc(&base, &cover, true)?;
    if !report.valid {
        return Err(CoverError::Invalid(report.to_string()));
    }
    Ok(cover)
}

/// `cycles k` followed by one cycle per line.
pub fn parse_cycles(text: &str) -> Result<CycleCover, CoverError> {
    let err = |line: usize, reason: String| CoverError::Parse { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header".into()))?;
    let k: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["cycles", k] => k
            .parse()
            .map_err(|_| err(hline, format!("invalid cycle count {k:?}")))?,
        _ => return Err(err(hline, "expected header `cycles <k>`".into())),
    };
    let mut cycles = Vec::new();
    for (line, text) in lines {
        let vs = text
            .split_whitespace()
            .map(|t| {
                t.parse::<VertexId>()
                    .map_err(|_| err(line, format!("invalid vertex {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(DiCycle(vs));
    }
    if cycles.len() != k {
        return Err(err(
            hline,
            format!("header declares {k} cycles, found {}", cycles.len()),
        ));
    }
    Ok(CycleCover { cycles })
}

pub fn emit_cycles(c: &CycleCover) -> String {
    let mut out = format!("cycles {}\n", c.len());
    for cyc in &c.cycles {
        let line: Vec<String> = cyc.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
