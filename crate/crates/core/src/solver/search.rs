//! Backtracking completion of a partial path system.
//!
//! A [`Completion`] describes what is left to do: a set of free arcs, the
//! vertices that still have to begin a path and those that still have to end
//! one. The full problem on a graph is the completion with every arc free and
//! every vertex pending on both sides; lifts and local repairs pose smaller
//! completions around a fixed remainder of a cover.

use std::time::Instant;

use super::symmetry::Symmetry;
use crate::graph::VertexId;

/// Node and wall-clock accounting shared by nested searches.
#[derive(Debug)]
pub(crate) struct Meter {
    pub(crate) nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    tripped: bool,
}

impl Meter {
    pub(crate) fn new(max_nodes: u64, deadline: Option<Instant>) -> Self {
        Meter {
            nodes: 0,
            max_nodes,
            deadline,
            tripped: false,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.tripped = true;
        } else if self.nodes & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.tripped = true;
                }
            }
        }
        !self.tripped
    }

    pub(crate) fn tripped(&self) -> bool {
        self.tripped
    }

    pub(crate) fn remaining(&self) -> u64 {
        self.max_nodes.saturating_sub(self.nodes)
    }

    /// A meter limited to `limit` further nodes (and the same deadline).
    pub(crate) fn child(&self, limit: u64) -> Meter {
        Meter::new(limit.min(self.remaining()), self.deadline)
    }

    /// Charges the work of a finished child. The parent trips only when its
    /// own budget or deadline is exhausted, not when the child hit its cap.
    pub(crate) fn absorb(&mut self, child: &Meter) {
        self.nodes += child.nodes;
        if self.nodes >= self.max_nodes {
            self.tripped = true;
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.tripped = true;
            }
        }
    }
}

/// What remains to be covered: `out[u]` has bit `w` for every free arc
/// `u -> w`; every vertex of `starts` must begin one new path and every
/// vertex in `ends` must end one.
#[derive(Debug, Clone)]
pub(crate) struct Completion {
    pub(crate) out: Vec<u64>,
    pub(crate) starts: u64,
    pub(crate) ends: u64,
}

pub(crate) enum Outcome {
    Found(Vec<Vec<VertexId>>),
    Exhausted,
    Tripped,
}

impl Completion {
    /// The whole problem on a graph given by adjacency masks.
    pub(crate) fn full(adj: &[u64]) -> Self {
        let n = adj.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Completion {
            out: adj.to_vec(),
            starts: all,
            ends: all,
        }
    }

    pub(crate) fn solve(&self, meter: &mut Meter, sym: Option<&Symmetry>) -> Outcome {
        let n = self.out.len();
        assert!(n <= 64);
        if self.starts.count_ones() != self.ends.count_ones() {
            return Outcome::Exhausted;
        }
        let mut inn = vec![0u64; n];
        let mut arcs = 0;
        for u in 0..n {
            let mut m = self.out[u];
            arcs += m.count_ones() as usize;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                inn[w] |= 1 << u;
            }
        }
        if self.starts == 0 {
            return if arcs == 0 {
                Outcome::Found(Vec::new())
            } else {
                Outcome::Exhausted
            };
        }
        let first = self.starts.trailing_zeros() as usize;
        let mut st = State {
            n,
            out: self.out.clone(),
            inn,
            need_end: self.ends,
            pending: self.starts & !(1 << first),
            arcs,
            cur: vec![first],
            cur_mask: 1 << first,
            done: Vec::new(),
            sym,
            meter,
        };
        match st.dfs() {
            Flow::Found => Outcome::Found(st.done),
            Flow::Fail => Outcome::Exhausted,
            Flow::Trip => Outcome::Tripped,
        }
    }
}

#[derive(PartialEq, Eq)]
enum Flow {
    Found,
    Fail,
    Trip,
}

/// Prefix length up to which the first path is pruned by symmetry.
const SYMMETRY_DEPTH: usize = 6;

struct State<'a> {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    need_end: u64,
    pending: u64,
    arcs: usize,
    cur: Vec<VertexId>,
    cur_mask: u64,
    done: Vec<Vec<VertexId>>,
    sym: Option<&'a Symmetry>,
    meter: &'a mut Meter,
}

impl State<'_> {
    fn tip(&self) -> VertexId {
        *self.cur.last().unwrap()
    }

    fn feasible(&self) -> bool {
        let tip = self.tip();
        let r = self.pending.count_ones() as usize;
        if self.arcs < r || self.arcs > (self.n - self.cur.len()) + r * (self.n - 1) {
            return false;
        }
        for u in 0..self.n {
            let bit = 1u64 << u;
            let r_in = self.inn[u].count_ones() as usize;
            let starts_here = (self.pending & bit != 0) as usize;
            if u == tip {
                if r_in + starts_here > r {
                    return false;
                }
                continue;
            }
            if self.need_end & bit != 0 && r_in == 0 {
                return false;
            }
            if starts_here == 1 && self.out[u] == 0 {
                return false;
            }
            let cap = r + (self.cur_mask & bit == 0) as usize;
            if r_in + starts_here > cap {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self) -> Flow {
        if !self.meter.tick() {
            return Flow::Trip;
        }
        if !self.feasible() {
            return Flow::Fail;
        }
        let tip = self.tip();
        let mut cands = self.out[tip] & !self.cur_mask;
        if let Some(sym) = self.sym {
            if self.done.is_empty() && self.cur.len() <= SYMMETRY_DEPTH {
                cands = sym.representatives(&self.cur, cands);
            }
        }
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            self.out[tip] &= !(1 << w);
            self.inn[w] &= !(1 << tip);
            self.arcs -= 1;
            self.cur.push(w);
            self.cur_mask |= 1 << w;
            let f = self.dfs();
            if f == Flow::Found {
                return f;
            }
            self.cur_mask &= !(1 << w);
            self.cur.pop();
            self.arcs += 1;
            self.inn[w] |= 1 << tip;
            self.out[tip] |= 1 << w;
            if f == Flow::Trip {
                return f;
            }
        }
        if self.cur.len() >= 2 && self.need_end & (1 << tip) != 0 {
            return self.close(tip);
        }
        Flow::Fail
    }

    fn close(&mut self, tip: VertexId) -> Flow {
        self.need_end &= !(1 << tip);
        let path = std::mem::take(&mut self.cur);
        let mask = self.cur_mask;
        self.done.push(path);
        let f = if self.pending == 0 {
            if self.arcs == 0 {
                Flow::Found
            } else {
                Flow::Fail
            }
        } else {
            let s = self.pending.trailing_zeros() as usize;
            self.pending &= !(1 << s);
            self.cur = vec![s];
            self.cur_mask = 1 << s;
            let f = self.dfs();
            if f != Flow::Found {
                self.pending |= 1 << s;
            }
            f
        };
        if f != Flow::Found {
            self.cur = self.done.pop().unwrap();
            self.cur_mask = mask;
            self.need_end |= 1 << tip;
        }
        f
    }
}
