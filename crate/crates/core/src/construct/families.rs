use super::{checked, require_valid, ConstructError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{cartesian_product, product_vertex, Graph};

/// Cover of the cycle `0 - 1 - ... - (n-1) - 0`. With `v_i` the vertex
/// `i - 1` the paths are `v_n v_{n-1}`, `v_{n-1} ... v_1 v_n`,
/// `v_{n-2} v_{n-1} v_n v_1` and `v_i v_{i+1}` for `i <= n - 3`.
pub fn cycle_cover(n: usize) -> Result<PathCover, ConstructError> {
    if n == 3 {
        return Err(ConstructError::NoCover("K3".into()));
    }
    if n < 3 {
        return Err(ConstructError::Domain(format!(
            "a cycle needs at least 4 vertices, got {n}"
        )));
    }
    let v = |i: usize| i - 1;
    let mut paths = vec![
        DiPath::new(vec![v(n), v(n - 1)]),
        DiPath::new((1..n).rev().map(v).chain([v(n)]).collect()),
        DiPath::new(vec![v(n - 2), v(n - 1), v(n), v(1)]),
    ];
    paths.extend((1..=n - 3).map(|i| DiPath::new(vec![v(i), v(i + 1)])));
    checked(&Graph::cycle(n), PathCover::new(paths))
}

/// Cover of `K_{n,m}` with parts `v_1..v_n` (ids `0..n`) and `w_1..w_m`
/// (ids `n..n+m`), built by induction on `m`.
pub fn complete_bipartite_cover(n: usize, m: usize) -> Result<PathCover, ConstructError> {
    if n == 0 || m == 0 {
        return Err(ConstructError::Domain(
            "both parts must be non-empty".into(),
        ));
    }
    let v = |i: usize| i - 1;
    let w = |j: usize| n + j - 1;
    // from_v[i] is P^{v_i}, from_w[j] is P^{w_j}, 1-based
    let mut from_v: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut from_w: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    from_v[1] = vec![v(1), w(1)];
    from_w[1] = vec![w(1), v(n)];
    for i in 2..=n {
        from_v[i] = vec![v(i), w(1), v(i - 1)];
    }
    for k in 2..=m {
        let prev = from_v.clone();
        from_v[1] = vec![v(1), w(k)];
        from_w[k] = [vec![w(k)], prev[n].clone()].concat();
        for i in 2..=n {
            from_v[i] = [vec![v(i), w(k)], prev[i - 1].clone()].concat();
        }
    }
    let paths = from_v
        .into_iter()
        .skip(1)
        .chain(from_w.into_iter().skip(1))
        .map(DiPath::new)
        .collect();
    checked(&Graph::complete_bipartite(n, m), PathCover::new(paths))
}

/// Cover of `g □ h`: the path at `(u, v)` runs along `P_u` (the path of `cg`
/// ending at `u`) in the copy of `g` at `v`, then along `Q^v` (the path of
/// `ch` beginning at `v`) in the copy of `h` at `u`.
pub fn product_cover(
    g: &Graph,
    cg: &PathCover,
    h: &Graph,
    ch: &PathCover,
) -> Result<PathCover, ConstructError> {
    require_valid(g, cg)?;
    require_valid(h, ch)?;
    if g.has_isolated_vertex() || h.has_isolated_vertex() {
        return Err(ConstructError::Domain(
            "factors must not have isolated vertices".into(),
        ));
    }
    let ho = h.order();
    let mut paths = Vec::with_capacity(g.order() * ho);
    for u in 0..g.order() {
        let p = cg.ending_at(u).expect("valid cover");
        for v in 0..ho {
            let q = ch.starting_at(v).expect("valid cover");
            let seq = p
                .vertices()
                .iter()
                .map(|&x| product_vertex(x, v, ho))
                .chain(q.vertices()[1..].iter().map(|&y| product_vertex(u, y, ho)))
                .collect();
            paths.push(DiPath::new(seq));
        }
    }
    checked(&cartesian_product(g, h), PathCover::new(paths))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_matches_formula() {
        // 1-based {43, 3214, 2341, 12}
        let c = cycle_cover(4).unwrap();
        let expect =
            PathCover::from_sequences([vec![3, 2], vec![2, 1, 0, 3], vec![1, 2, 3, 0], vec![0, 1]]);
        assert_eq!(c, expect);
        assert_eq!(c.arc_count(), 8);
    }

    #[test]
    fn short_cycles_are_rejected() {
        assert_eq!(cycle_cover(3), Err(ConstructError::NoCover("K3".into())));
        assert!(cycle_cover(2).is_err());
        assert_eq!(cycle_cover(5).unwrap().len(), 5);
    }

    #[test]
    fn biclique_base_cases() {
        assert_eq!(
            complete_bipartite_cover(1, 1).unwrap(),
            PathCover::from_sequences([vec![0, 1], vec![1, 0]])
        );
        // {v1w1, v2w1v1, w1v2}
        assert_eq!(
            complete_bipartite_cover(2, 1).unwrap().canonical(),
            PathCover::from_sequences([vec![0, 2], vec![1, 2, 0], vec![2, 1]])
        );
        let c = complete_bipartite_cover(3, 3).unwrap();
        assert_eq!((c.len(), c.arc_count()), (6, 18));
    }

    #[test]
    fn k2_square_k2_is_four_paths_of_length_two() {
        let k2 = Graph::complete(2);
        let c = PathCover::from_sequences([vec![0, 1], vec![1, 0]]);
        let r = product_cover(&k2, &c, &k2, &c).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.paths().iter().all(|p| p.len() == 2));
    }

    #[test]
    fn product_rejects_isolated_factor() {
        let k1 = Graph::empty(1);
        let c1 = PathCover::from_sequences([vec![0]]);
        let c4 = cycle_cover(4).unwrap();
        assert!(matches!(
            product_cover(&Graph::cycle(4), &c4, &k1, &c1),
            Err(ConstructError::Domain(_))
        ));
    }
}
