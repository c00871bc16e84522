//! Directed paths, path covers and their text format.

mod socdc;
mod verify;

pub use socdc::{
    emit_cycles, oppdc_to_socdc, parse_cycles, socdc_to_oppdc, verify_socdc, CycleCover, DiCycle,
};
pub use verify::{verify_oppdc, Detail, VerifyReport, Violation, ViolationKind};

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("vertex {vertex} does not belong to a graph of order {order}")]
    ForeignVertex { vertex: VertexId, order: usize },
    #[error("cover is not a valid OPPDC: {0}")]
    Invalid(String),
    #[error("zero-length path at vertex {0} cannot be converted")]
    ZeroLengthPath(VertexId),
    #[error("vertex {0} is not adjacent to every other vertex")]
    ApexNotUniversal(VertexId),
    #[error("cycle {0} avoids the apex")]
    CycleMissesApex(usize),
}

/// A directed path given by its vertex sequence. A single vertex is a path
/// of length zero. Simplicity is not enforced here; the verifier reports it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiPath(Vec<VertexId>);

impl DiPath {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        DiPath(vertices)
    }

    pub fn single(v: VertexId) -> Self {
        DiPath(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.0.len());
        self.0.iter().all(|v| seen.insert(*v))
    }

    pub fn reversed(&self) -> DiPath {
        DiPath(self.0.iter().rev().copied().collect())
    }

    /// `self` followed by `tail`, which must start where `self` ends.
    pub fn join(&self, tail: &DiPath) -> DiPath {
        assert_eq!(self.last(), tail.first(), "paths do not meet");
        let mut v = self.0.clone();
        v.extend_from_slice(&tail.0[1..]);
        DiPath(v)
    }

    /// Appends a vertex at the end.
    pub fn then(&self, v: VertexId) -> DiPath {
        let mut p = self.0.clone();
        p.push(v);
        DiPath(p)
    }

    /// Prepends a vertex at the start.
    pub fn after(&self, v: VertexId) -> DiPath {
        let mut p = Vec::with_capacity(self.0.len() + 1);
        p.push(v);
        p.extend_from_slice(&self.0);
        DiPath(p)
    }

    pub fn relabel(&self, map: &[VertexId]) -> DiPath {
        DiPath(self.0.iter().map(|&v| map[v]).collect())
    }
}

impl From<Vec<VertexId>> for DiPath {
    fn from(v: Vec<VertexId>) -> Self {
        DiPath::new(v)
    }
}

impl fmt::Debug for DiPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(">"))
    }
}

/// A candidate OPPDC: a list of directed paths with begin (`P^v`) and end
/// (`P_v`) indexes. Invalid candidates are representable so that the
/// verifier can explain what is wrong with them.
#[derive(Clone, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<DiPath>,
    begins: BTreeMap<VertexId, Vec<usize>>,
    ends: BTreeMap<VertexId, Vec<usize>>,
}

impl PathCover {
    pub fn new(paths: Vec<DiPath>) -> Self {
        let mut begins: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        let mut ends: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, p) in paths.iter().enumerate() {
            begins.entry(p.first()).or_default().push(i);
            ends.entry(p.last()).or_default().push(i);
        }
        PathCover {
            paths,
            begins,
            ends,
        }
    }

    pub fn from_sequences<I, P>(seqs: I) -> Self
    where
        I: IntoIterator<Item = P>,
        P: Into<Vec<VertexId>>,
    {
        PathCover::new(seqs.into_iter().map(|s| DiPath::new(s.into())).collect())
    }

    pub fn paths(&self) -> &[DiPath] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<DiPath> {
        self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Total number of arcs over all paths.
    pub fn arc_count(&self) -> usize {
        self.paths.iter().map(DiPath::len).sum()
    }

    pub fn begin_count(&self, v: VertexId) -> usize {
        self.begins.get(&v).map_or(0, Vec::len)
    }

    pub fn end_count(&self, v: VertexId) -> usize {
        self.ends.get(&v).map_or(0, Vec::len)
    }

    /// Index of the unique path beginning at `v` (`P^v`).
    pub fn begin_index(&self, v: VertexId) -> Option<usize> {
        match self.begins.get(&v).map(Vec::as_slice) {
            Some(&[i]) => Some(i),
            _ => None,
        }
    }

    /// Index of the unique path ending at `v` (`P_v`).
    pub fn end_index(&self, v: VertexId) -> Option<usize> {
        match self.ends.get(&v).map(Vec::as_slice) {
            Some(&[i]) => Some(i),
            _ => None,
        }
    }

    pub fn starting_at(&self, v: VertexId) -> Option<&DiPath> {
        self.begin_index(v).map(|i| &self.paths[i])
    }

    pub fn ending_at(&self, v: VertexId) -> Option<&DiPath> {
        self.end_index(v).map(|i| &self.paths[i])
    }

    /// Largest vertex id mentioned, if any.
    pub fn max_vertex(&self) -> Option<VertexId> {
        self.paths
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .max()
    }

    /// Every path reversed; a valid cover stays valid.
    pub fn reversed(&self) -> PathCover {
        PathCover::new(self.paths.iter().map(DiPath::reversed).collect())
    }

    pub fn relabel(&self, map: &[VertexId]) -> PathCover {
        PathCover::new(self.paths.iter().map(|p| p.relabel(map)).collect())
    }

    /// Paths sorted by their vertex sequence; handy for comparing covers.
    pub fn canonical(&self) -> PathCover {
        let mut paths = self.paths.clone();
        paths.sort();
        PathCover::new(paths)
    }

    /// Multiset of arcs as a sorted list.
    pub fn arc_list(&self) -> Vec<(VertexId, VertexId)> {
        let mut arcs: Vec<_> = self.paths.iter().flat_map(|p| p.arcs()).collect();
        arcs.sort_unstable();
        arcs
    }
}

impl fmt::Debug for PathCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.paths.iter()).finish()
    }
}

/// Parses the cover text format: `paths k` followed by `k` lines of vertex
/// ids in traversal order. Non-simple paths and vertices beginning or ending
/// more than one path are rejected.
pub fn parse_cover(text: &str) -> Result<PathCover, CoverError> {
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
        ["paths", k] => k
            .parse()
            .map_err(|_| err(hline, format!("invalid path count {k:?}")))?,
        _ => return Err(err(hline, "expected header `paths <k>`".into())),
    };
    let mut paths = Vec::with_capacity(k);
    let mut begun = HashSet::new();
    let mut ended = HashSet::new();
    for (line, text) in lines {
        if paths.len() == k {
            return Err(err(line, format!("more than {k} paths")));
        }
        let vs = text
            .split_whitespace()
            .map(|t| {
                t.parse::<VertexId>()
                    .map_err(|_| err(line, format!("invalid vertex {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let p = DiPath::new(vs);
        if !p.is_simple() {
            return Err(err(line, "non-simple path".into()));
        }
        if !begun.insert(p.first()) {
            return Err(err(line, format!("vertex {} begins two paths", p.first())));
        }
        if !ended.insert(p.last()) {
            return Err(err(line, format!("vertex {} ends two paths", p.last())));
        }
        paths.push(p);
    }
    if paths.len() != k {
        return Err(err(
            hline,
            format!("header declares {k} paths, found {}", paths.len()),
        ));
    }
    Ok(PathCover::new(paths))
}

pub fn emit_cover(c: &PathCover) -> String {
    let mut out = format!("paths {}\n", c.len());
    for p in c.paths() {
        let line: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_k2_cover() {
        let c = parse_cover("paths 2\n0 1\n1 0").unwrap();
        assert_eq!(
            c.paths(),
            &[DiPath::new(vec![0, 1]), DiPath::new(vec![1, 0])]
        );
        assert_eq!(c.begin_index(1), Some(1));
        assert_eq!(c.end_index(1), Some(0));
    }

    #[test]
    fn emit_parse_is_identity_on_canonical_text() {
        let text = "paths 3\n0 1 2\n1 0\n2 1\n";
        assert_eq!(emit_cover(&parse_cover(text).unwrap()), text);
    }

    #[test]
    fn rejects_bad_covers() {
        assert!(matches!(
            parse_cover("paths 1\n0 1 0"),
            Err(CoverError::Parse { line: 2, ref reason }) if reason.contains("non-simple")
        ));
        assert!(matches!(
            parse_cover("paths 2\n0 1\n0 2"),
            Err(CoverError::Parse { line: 3, ref reason }) if reason.contains("begins two")
        ));
        assert!(parse_cover("paths 2\n0 1").is_err());
        assert!(parse_cover("path 1\n0 1").is_err());
        assert!(parse_cover("paths 1\n0 x").is_err());
    }

    #[test]
    fn join_and_reverse() {
        let a = DiPath::new(vec![0, 1]);
        let b = DiPath::new(vec![1, 2, 3]);
        assert_eq!(a.join(&b), DiPath::new(vec![0, 1, 2, 3]));
        assert_eq!(b.reversed(), DiPath::new(vec![3, 2, 1]));
        assert_eq!(a.then(5).after(4), DiPath::new(vec![4, 0, 1, 5]));
    }
}
