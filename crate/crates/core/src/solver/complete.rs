//! Covers of complete graphs.

use super::search::Meter;
use super::{assert_cover, search_cover, Budget, SolveError};
use crate::cover::{DiPath, PathCover};
use crate::graph::{Graph, VertexId};
use crate::solver::local::Repair;

/// Cover of `K_n`. Even `n` uses the zigzag Hamiltonian paths
/// `i, i+1, i-1, i+2, i-2, ...` (mod `n`) for `i < n/2` together with their
/// reversals. Odd `n >= 7` comes from a decomposition of the complete
/// symmetric digraph on `n + 1` vertices into directed Hamiltonian cycles:
/// deleting the extra vertex leaves `n` Hamiltonian paths with distinct
/// first and distinct last vertices. `K3` and `K5` have no cover.
pub fn complete_graph_cover(n: usize, budget: Budget) -> Result<PathCover, SolveError> {
    let c = match n {
        0 => PathCover::new(Vec::new()),
        1 => PathCover::new(vec![DiPath::single(0)]),
        3 | 5 => return Err(SolveError::NoCover(format!("K{n}"))),
        _ if n % 2 == 0 => zigzag_cover(n),
        _ => odd_cover(n, budget)?,
    };
    assert_cover(&Graph::complete(n), &c);
    Ok(c)
}

fn zigzag_cover(n: usize) -> PathCover {
    let mut paths = Vec::with_capacity(n);
    for i in 0..n / 2 {
        let mut seq = vec![i];
        for t in 1..n {
            let step = t.div_ceil(2);
            let v = if t % 2 == 1 { i + step } else { i + n - step };
            seq.push(v % n);
        }
        let p = DiPath::new(seq);
        paths.push(p.reversed());
        paths.push(p);
    }
    PathCover::new(paths)
}

fn odd_cover(n: usize, budget: Budget) -> Result<PathCover, SolveError> {
    let mut meter = budget.meter();
    if n < 64 {
        if let Some(cycles) = Decomposition::new(n).run(&mut meter) {
            return Ok(PathCover::new(
                cycles.into_iter().map(DiPath::new).collect(),
            ));
        }
        if meter.tripped() {
            return Err(SolveError::BudgetExhausted);
        }
    }
    match search_cover(&Graph::complete(n), &mut meter) {
        Repair::Found(c) => Ok(c),
        Repair::Exhausted => Err(SolveError::NoCover(format!("K{n}"))),
        Repair::Tripped => Err(SolveError::BudgetExhausted),
    }
}

/// Directed Hamiltonian cycles through `inf = n` of the complete symmetric
/// digraph on `n + 1` vertices, stored without `inf`. Cycle 0 is
/// `inf, 0, 1, ..., n-1`; cycle `c` starts with the arc `inf -> c`.
struct Decomposition {
    n: usize,
    /// Free arcs among the finite vertices.
    out: Vec<u64>,
    /// Finite vertices whose arc into `inf` is still free.
    to_inf: u64,
    cycles: Vec<Vec<VertexId>>,
}

impl Decomposition {
    fn new(n: usize) -> Self {
        let all = (1u64 << n) - 1;
        let mut out: Vec<u64> = (0..n).map(|v| all & !(1 << v)).collect();
        for v in 0..n - 1 {
            out[v] &= !(1 << (v + 1));
        }
        Decomposition {
            n,
            out,
            to_inf: all & !(1 << (n - 1)),
            cycles: vec![(0..n).collect()],
        }
    }

    fn run(mut self, meter: &mut Meter) -> Option<Vec<Vec<VertexId>>> {
        if self.cycle(1, meter) {
            Some(self.cycles)
        } else {
            None
        }
    }

    /// Builds cycle `c` and every later one.
    fn cycle(&mut self, c: usize, meter: &mut Meter) -> bool {
        if c == self.n {
            return true;
        }
        self.cycles.push(vec![c]);
        if self.extend(c, 1 << c, meter) {
            return true;
        }
        self.cycles.pop();
        false
    }

    fn extend(&mut self, c: usize, visited: u64, meter: &mut Meter) -> bool {
        if !meter.tick() {
            return false;
        }
        let all = (1u64 << self.n) - 1;
        let tip = *self.cycles[c].last().unwrap();
        if visited == all {
            if self.to_inf & (1 << tip) == 0 {
                return false;
            }
            self.to_inf &= !(1 << tip);
            if self.cycle(c + 1, meter) {
                return true;
            }
            self.to_inf |= 1 << tip;
            return false;
        }
        let mut cand = self.out[tip] & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.out[tip] &= !(1 << w);
            self.cycles[c].push(w);
            if self.feasible(w, visited | (1 << w)) && self.extend(c, visited | (1 << w), meter) {
                return true;
            }
            self.cycles[c].pop();
            self.out[tip] |= 1 << w;
            if meter.tripped() {
                return false;
            }
        }
        false
    }

    /// Every unvisited vertex still has a free arc in from the tip or
    /// another unvisited vertex, and a free arc out to an unvisited vertex
    /// or `inf`.
    fn feasible(&self, tip: VertexId, visited: u64) -> bool {
        let all = (1u64 << self.n) - 1;
        let rest = all & !visited;
        if rest == 0 {
            return self.to_inf & (1 << tip) != 0;
        }
        if self.out[tip] & rest == 0 {
            return false;
        }
        let mut r = rest;
        while r != 0 {
            let x = r.trailing_zeros() as usize;
            r &= r - 1;
            let outs = self.out[x] & rest != 0 || self.to_inf & (1 << x) != 0;
            if !outs {
                return false;
            }
            let from = rest | (1 << tip);
            let mut has_in = false;
            let mut f = from & !(1 << x);
            while f != 0 {
                let y = f.trailing_zeros() as usize;
                f &= f - 1;
                if self.out[y] & (1 << x) != 0 {
                    has_in = true;
                    break;
                }
            }
            if !has_in {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_orders() {
        for n in (2..=16).step_by(2) {
            let c = complete_graph_cover(n, Budget::default()).unwrap();
            assert_eq!(c.len(), n);
            assert!(c.paths().iter().all(|p| p.len() == n - 1));
        }
        let k4 = zigzag_cover(4);
        assert_eq!(k4.paths()[1].vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn odd_orders() {
        for n in [7, 9, 11] {
            let c = complete_graph_cover(n, Budget::default()).unwrap();
            assert_eq!(c.len(), n);
        }
    }

    #[test]
    fn exceptions() {
        assert_eq!(
            complete_graph_cover(5, Budget::default()).unwrap_err(),
            SolveError::NoCover("K5".into())
        );
        assert!(complete_graph_cover(3, Budget::default()).is_err());
        assert_eq!(complete_graph_cover(1, Budget::default()).unwrap().len(), 1);
    }
}
