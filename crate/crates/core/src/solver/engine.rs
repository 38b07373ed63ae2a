//! Backtracking core shared by every exact parameter.
//!
//! A [`Problem`] is a conflict graph (pairs that must get distinct colors)
//! plus a family of parity sets. Under [`Parity::Strong`] every color that
//! appears in a set must appear an odd number of times; under
//! [`Parity::SomeOdd`] every nonempty set needs at least one color of odd
//! multiplicity. Neighbourhoods give the vertex parameters, faces give the
//! facial ones.

use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::coloring::Coloring;

use super::Clock;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    None,
    Strong,
    SomeOdd,
}

#[derive(Debug, Clone)]
pub struct Problem {
    n: usize,
    conflict: Vec<Vec<usize>>,
    sets: Vec<Vec<usize>>,
    sets_of: Vec<Vec<usize>>,
    parity: Parity,
    order: Vec<usize>,
}

impl Problem {
    /// `conflict` may contain duplicates; empty parity sets are dropped.
    pub fn new(n: usize, conflict_edges: &[(usize, usize)], sets: Vec<Vec<usize>>, parity: Parity) -> Self {
        let mut conflict = vec![Vec::new(); n];
        for &(u, v) in conflict_edges {
            if u != v {
                conflict[u].push(v);
                conflict[v].push(u);
            }
        }
        for list in &mut conflict {
            list.sort_unstable();
            list.dedup();
        }
        let sets: Vec<Vec<usize>> = if parity == Parity::None {
            Vec::new()
        } else {
            sets.into_iter()
                .map(|mut s| {
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .filter(|s| !s.is_empty())
                .collect()
        };
        let mut sets_of = vec![Vec::new(); n];
        for (i, s) in sets.iter().enumerate() {
            for &v in s {
                sets_of[v].push(i);
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(conflict[v].len()), v));
        Problem {
            n,
            conflict,
            sets,
            sets_of,
            parity,
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The fixed branching order.
    pub fn vertex_order(&self) -> &[usize] {
        &self.order
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Coloring),
    No,
    Unknown,
}

pub(crate) struct Limits<'c> {
    pub max_nodes: u64,
    pub deadline: Option<Duration>,
    pub clock: &'c dyn Clock,
}

enum Flow {
    Continue,
    Stop,
    Abort,
}

struct Search<'p, 'c, F> {
    p: &'p Problem,
    k: usize,
    color: Vec<usize>,
    forbid: Vec<u32>,
    counts: Vec<u32>,
    uncolored: Vec<usize>,
    even_pos: Vec<usize>,
    odd: Vec<usize>,
    nodes: u64,
    limits: &'p Limits<'c>,
    on_solution: F,
}

impl<'p, 'c, F: FnMut(&[usize]) -> bool> Search<'p, 'c, F> {
    fn new(p: &'p Problem, k: usize, limits: &'p Limits<'c>, on_solution: F) -> Self {
        Search {
            p,
            k,
            color: vec![NONE; p.n],
            forbid: vec![0; p.n * k],
            counts: vec![0; p.sets.len() * k],
            uncolored: p.sets.iter().map(Vec::len).collect(),
            even_pos: vec![0; p.sets.len()],
            odd: vec![0; p.sets.len()],
            nodes: 0,
            limits,
            on_solution,
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.nodes >= self.limits.max_nodes {
            return true;
        }
        if let Some(deadline) = self.limits.deadline {
            if self.nodes.is_multiple_of(1024) && self.limits.clock.elapsed() >= deadline {
                return true;
            }
        }
        false
    }

    fn bump(&mut self, s: usize, c: usize, delta: i32) {
        let slot = &mut self.counts[s * self.k + c];
        let before = *slot;
        *slot = (before as i32 + delta) as u32;
        let after = *slot;
        let was_even_pos = before > 0 && before.is_multiple_of(2);
        let is_even_pos = after > 0 && after.is_multiple_of(2);
        match (was_even_pos, is_even_pos) {
            (false, true) => self.even_pos[s] += 1,
            (true, false) => self.even_pos[s] -= 1,
            _ => {}
        }
        match (before % 2 == 1, after % 2 == 1) {
            (false, true) => self.odd[s] += 1,
            (true, false) => self.odd[s] -= 1,
            _ => {}
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for &u in &self.p.conflict[v] {
            self.forbid[u * self.k + c] += 1;
        }
        for i in 0..self.p.sets_of[v].len() {
            let s = self.p.sets_of[v][i];
            self.uncolored[s] -= 1;
            self.bump(s, c, 1);
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        for i in 0..self.p.sets_of[v].len() {
            let s = self.p.sets_of[v][i];
            self.uncolored[s] += 1;
            self.bump(s, c, -1);
        }
        for &u in &self.p.conflict[v] {
            self.forbid[u * self.k + c] -= 1;
        }
        self.color[v] = NONE;
    }

    /// Some uncolored member of set `s` may still legally take `c`.
    fn has_candidate(&self, s: usize, c: usize) -> bool {
        self.p.sets[s]
            .iter()
            .any(|&u| self.color[u] == NONE && self.forbid[u * self.k + c] == 0)
    }

    fn consistent(&self, v: usize, c: usize) -> bool {
        let strong = self.p.parity == Parity::Strong;
        for &s in &self.p.sets_of[v] {
            if self.uncolored[s] == 0 {
                let bad = match self.p.parity {
                    Parity::Strong => self.even_pos[s] > 0,
                    Parity::SomeOdd => self.odd[s] == 0,
                    Parity::None => false,
                };
                if bad {
                    return false;
                }
            } else if strong && self.even_pos[s] > 0 {
                // v just left the candidate pool of s for every color.
                for c2 in 0..self.k {
                    let cnt = self.counts[s * self.k + c2];
                    if cnt > 0 && cnt.is_multiple_of(2) && !self.has_candidate(s, c2) {
                        return false;
                    }
                }
            }
        }
        if strong {
            // c just became illegal at v's uncolored conflict neighbours.
            for &u in &self.p.conflict[v] {
                if self.color[u] != NONE {
                    continue;
                }
                for &s in &self.p.sets_of[u] {
                    let cnt = self.counts[s * self.k + c];
                    if cnt > 0 && cnt.is_multiple_of(2) && !self.has_candidate(s, c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize, used: usize) -> Flow {
        if depth == self.p.n {
            return if (self.on_solution)(&self.color) {
                Flow::Continue
            } else {
                Flow::Stop
            };
        }
        let v = self.p.order[depth];
        let top = (used + 1).min(self.k);
        for c in 0..top {
            if self.forbid[v * self.k + c] > 0 {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return Flow::Abort;
            }
            self.assign(v, c);
            let flow = if self.consistent(v, c) {
                self.run(depth + 1, used.max(c + 1))
            } else {
                Flow::Continue
            };
            self.unassign(v, c);
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

pub(crate) struct RunStats {
    pub nodes: u64,
    pub aborted: bool,
}

/// Visit canonical solutions with at most `k` colors until `visit` returns
/// `false`. Canonical: the first vertex in branching order gets 0, and a new
/// color is always the smallest unused id.
pub(crate) fn enumerate(
    p: &Problem,
    k: usize,
    limits: &Limits<'_>,
    visit: impl FnMut(&[usize]) -> bool,
) -> RunStats {
    if p.n == 0 {
        let mut visit = visit;
        visit(&[]);
        return RunStats { nodes: 0, aborted: false };
    }
    let mut search = Search::new(p, k, limits, visit);
    let flow = search.run(0, 0);
    RunStats {
        nodes: search.nodes,
        aborted: matches!(flow, Flow::Abort),
    }
}

pub(crate) fn decide(p: &Problem, k: usize, limits: &Limits<'_>) -> (Decision, u64) {
    let mut found = None;
    let stats = enumerate(p, k, limits, |colors| {
        found = Some(Coloring::new(colors.to_vec()));
        false
    });
    let decision = match found {
        Some(w) => Decision::Yes(w),
        None if stats.aborted => Decision::Unknown,
        None => Decision::No,
    };
    (decision, stats.nodes)
}
