//! Automorphism queries used to prune the first path of the search.
//!
//! Colour refinement only proposes candidate images; every equivalence used
//! for pruning is backed by an explicit automorphism found by backtracking.
//! When that search hits its node limit the pair is treated as inequivalent,
//! which costs pruning but never soundness.

const AUTO_NODE_LIMIT: u64 = 20_000;

pub(crate) struct Symmetry {
    adj: Vec<u64>,
    colors: Vec<u32>,
}

impl Symmetry {
    pub(crate) fn new(adj: &[u64]) -> Self {
        Symmetry {
            adj: adj.to_vec(),
            colors: refine(adj),
        }
    }

    /// Candidates (a bitmask) reduced to one representative per orbit of the
    /// pointwise stabiliser of `fixed`; the smallest id of each orbit is kept.
    pub(crate) fn representatives(&self, fixed: &[usize], candidates: u64) -> u64 {
        let mut reps = 0u64;
        let mut covered = 0u64;
        let mut rest = candidates;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if covered >> w & 1 == 1 {
                continue;
            }
            reps |= 1 << w;
            let mut others = rest & !covered;
            while others != 0 {
                let x = others.trailing_zeros() as usize;
                others &= others - 1;
                if self.colors[x] == self.colors[w] && self.maps(fixed, w, x) {
                    covered |= 1 << x;
                }
            }
        }
        reps
    }

    fn maps(&self, fixed: &[usize], from: usize, to: usize) -> bool {
        let mut pairs: Vec<(usize, usize)> = fixed.iter().map(|&v| (v, v)).collect();
        pairs.push((from, to));
        find_automorphism(&self.adj, &self.colors, &pairs, AUTO_NODE_LIMIT).is_some()
    }
}

/// Iterated degree refinement; equal colours are necessary for two vertices
/// to lie in one orbit.
fn refine(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut colors: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| colors[w])
                    .collect();
                ns.sort_unstable();
                (colors[v], ns)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        let classes_before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        let stable = distinct.len() == classes_before;
        colors = next;
        if stable {
            return colors;
        }
    }
}

/// Backtracking search for an automorphism extending the partial map
/// `pairs`. Returns the permutation, or `None` if none exists or the node
/// limit was reached.
pub(crate) fn find_automorphism(
    adj: &[u64],
    colors: &[u32],
    pairs: &[(usize, usize)],
    limit: u64,
) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    for &(a, b) in pairs {
        if colors[a] != colors[b] {
            return None;
        }
        if image[a] != usize::MAX && image[a] != b {
            return None;
        }
        if image[a] == usize::MAX && used >> b & 1 == 1 {
            return None;
        }
        image[a] = b;
        used |= 1 << b;
    }
    for &(a, _) in pairs {
        for &(c, _) in pairs {
            if (adj[a] >> c & 1) != (adj[image[a]] >> image[c] & 1) {
                return None;
            }
        }
    }
    let order: Vec<usize> = (0..n).filter(|&v| image[v] == usize::MAX).collect();
    let mut nodes = 0;
    if extend(
        adj, colors, &order, 0, &mut image, &mut used, &mut nodes, limit,
    ) {
        Some(image)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    adj: &[u64],
    colors: &[u32],
    order: &[usize],
    k: usize,
    image: &mut [usize],
    used: &mut u64,
    nodes: &mut u64,
    limit: u64,
) -> bool {
    if k == order.len() {
        return true;
    }
    *nodes += 1;
    if *nodes > limit {
        return false;
    }
    let v = order[k];
    for cand in 0..adj.len() {
        if *used >> cand & 1 == 1 || colors[cand] != colors[v] {
            continue;
        }
        let consistent = (0..adj.len())
            .filter(|&u| image[u] != usize::MAX)
            .all(|u| (adj[v] >> u & 1) == (adj[cand] >> image[u] & 1));
        if !consistent {
            continue;
        }
        image[v] = cand;
        *used |= 1 << cand;
        if extend(adj, colors, order, k + 1, image, used, nodes, limit) {
            return true;
        }
        image[v] = usize::MAX;
        *used &= !(1 << cand);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn masks(g: &Graph) -> Vec<u64> {
        g.adjacency_masks().unwrap()
    }

    #[test]
    fn complete_graph_is_fully_symmetric() {
        let s = Symmetry::new(&masks(&Graph::complete(5)));
        assert_eq!(s.representatives(&[0], 0b11110), 0b00010);
        assert_eq!(s.representatives(&[0, 1], 0b11100), 0b00100);
    }

    #[test]
    fn path_endpoints_are_equivalent_only_unfixed() {
        // path 0-1-2-3: 0 <-> 3 and 1 <-> 2 under the reflection
        let s = Symmetry::new(&masks(&Graph::path(4)));
        assert_eq!(s.representatives(&[], 0b1111), 0b0011);
        assert_eq!(s.representatives(&[0], 0b1110), 0b1110);
    }

    #[test]
    fn refinement_colours_are_not_trusted_blindly() {
        // two triangles vs a hexagon: same colours after refinement
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        let h = Graph::cycle(6);
        let mut both = g.disjoint_union(&h);
        both.add_vertex();
        let s = Symmetry::new(&masks(&both));
        // vertex 0 (triangle) and vertex 6 (hexagon) are not in one orbit
        assert_eq!(
            s.representatives(&[], (1 << 0) | (1 << 6)),
            (1 << 0) | (1 << 6)
        );
    }
}
