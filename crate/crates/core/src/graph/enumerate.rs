//! Brute-force enumeration of small connected graphs up to isomorphism.
//!
//! Edge subsets of `K_n` are scanned in increasing bitmask order; the first
//! member of every isomorphism class is kept and its whole orbit under the
//! symmetric group is marked. Practical up to `n = 7`.

use super::Graph;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn mask_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut adj = vec![0u64; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == n
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices, in increasing order of their graph6-bit masks.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "brute-force enumeration is limited to n <= 7");
    if n == 0 {
        return Vec::new();
    }
    let idx = pair_index(n);
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let bits = pairs.len();
    let perms = permutations(n);
    let mut seen = vec![false; 1usize << bits];
    let mut out = Vec::new();
    for mask in 0..(1u64 << bits) {
        if seen[mask as usize] || !mask_connected(n, mask, &pairs) {
            continue;
        }
        for p in &perms {
            let mut image = 0u64;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << idx[p[i]][p[j]];
                }
            }
            seen[image as usize] = true;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        out.push(Graph::from_edges(n, edges).expect("subset of K_n"));
    }
    out
}

/// All connected graphs on `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(6).len(), 143);
    }
}
