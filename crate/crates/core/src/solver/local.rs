//! Completing a partial cover: keep some paths, search for the rest.

use super::search::{Completion, Meter, Outcome};
use crate::cover::{DiPath, PathCover};
use crate::graph::{Graph, VertexId};

pub(crate) enum Repair {
    Found(PathCover),
    /// No completion exists for the kept paths.
    Exhausted,
    Tripped,
}

/// Completes `kept` (arc-disjoint paths of `g` with distinct first and
/// distinct last vertices) to a cover of `g`. Isolated vertices not on a
/// kept path get a zero-length path. Graphs over 64 vertices report
/// `Tripped`.
pub(crate) fn complete_cover(g: &Graph, kept: &[DiPath], meter: &mut Meter) -> Repair {
    let n = g.order();
    let Some(adj) = g.adjacency_masks() else {
        return Repair::Tripped;
    };
    let mut out = adj;
    let mut starts: u64 = 0;
    let mut ends: u64 = 0;
    let mut zero = Vec::new();
    let mut begun = vec![false; n];
    let mut ended = vec![false; n];
    for p in kept {
        begun[p.first()] = true;
        ended[p.last()] = true;
        for (a, b) in p.arcs() {
            out[a] &= !(1 << b);
        }
    }
    for v in 0..n {
        if g.is_isolated(v) {
            if !begun[v] && !ended[v] {
                zero.push(DiPath::single(v));
            }
            continue;
        }
        if !begun[v] {
            starts |= 1 << v;
        }
        if !ended[v] {
            ends |= 1 << v;
        }
    }
    let problem = Completion { out, starts, ends };
    match problem.solve(meter, None) {
        Outcome::Found(found) => {
            let mut paths = kept.to_vec();
            paths.extend(found.into_iter().map(DiPath::new));
            paths.extend(zero);
            Repair::Found(PathCover::new(paths))
        }
        Outcome::Exhausted => Repair::Exhausted,
        Outcome::Tripped => Repair::Tripped,
    }
}

/// Cap on the number of freed subsets tried by [`repair_near`].
const MAX_SUBSETS: usize = 400;

/// Frees the `mandatory` paths of `base` plus up to `max_extra` further paths
/// through a seed vertex, smallest subsets first, and completes the rest by
/// search with at most `per_try` nodes per subset. Returns the first cover
/// found. `None` means only that this local search failed.
pub(crate) fn repair_near(
    g: &Graph,
    base: &[DiPath],
    mandatory: &[usize],
    seeds: &[VertexId],
    max_extra: usize,
    per_try: u64,
    meter: &mut Meter,
) -> Option<PathCover> {
    let candidates: Vec<usize> = (0..base.len())
        .filter(|i| !mandatory.contains(i))
        .filter(|&i| seeds.iter().any(|&s| base[i].contains(s)))
        .collect();
    let mut tried = 0;
    for k in 0..=max_extra.min(candidates.len()) {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let freed: Vec<usize> = mandatory
                .iter()
                .copied()
                .chain(combo.iter().map(|&j| candidates[j]))
                .collect();
            let kept: Vec<DiPath> = (0..base.len())
                .filter(|i| !freed.contains(i))
                .map(|i| base[i].clone())
                .collect();
            let mut child = meter.child(per_try);
            let r = complete_cover(g, &kept, &mut child);
            meter.absorb(&child);
            if let Repair::Found(c) = r {
                return Some(c);
            }
            tried += 1;
            if meter.tripped() || tried >= MAX_SUBSETS {
                return None;
            }
            if !next_combination(&mut combo, candidates.len()) {
                break;
            }
        }
    }
    None
}

/// Advances `combo` (strictly increasing indices below `n`) to the next
/// combination in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
