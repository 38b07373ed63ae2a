//! Exact computation of χ, χ_o, χ_so and χ(G²).
//!
//! Each parameter is solved by deciding k = lower bound, lower bound + 1, ...
//! with the same backtracking engine, so a result is optimal exactly when
//! every smaller k was refuted by a completed search. The brute-force
//! [`oracle`] module is an independent cross-check that shares nothing with
//! the engine except the verifiers.

mod engine;
pub mod oracle;

use alloc::vec::Vec;
use core::time::Duration;

pub use engine::{Decision, Parity, Problem};
use engine::Limits;

use crate::coloring::Coloring;
use crate::error::SolveError;
use crate::graph::{square, Graph};

/// Monotonic time source. The core crate has no clock of its own; callers
/// with `std` pass one in to enforce `Budget::max_time`.
pub trait Clock {
    /// Time since an arbitrary fixed origin.
    fn elapsed(&self) -> Duration;
}

/// Clock that never advances: only the node limit applies.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Some(Duration::from_secs(60)),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_time: None,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
            max_time: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    /// χ
    Chromatic,
    /// χ_o
    Odd,
    /// χ_so
    StrongOdd,
    /// χ(G²)
    Square,
}

impl Param {
    pub const ALL: [Param; 4] = [Param::Chromatic, Param::Odd, Param::StrongOdd, Param::Square];

    pub fn name(self) -> &'static str {
        match self {
            Param::Chromatic => "chi",
            Param::Odd => "odd",
            Param::StrongOdd => "so",
            Param::Square => "square",
        }
    }

    /// Verifier for this parameter's coloring notion.
    pub fn verifies(self, g: &Graph, phi: &Coloring) -> bool {
        use crate::coloring::{is_odd, is_proper, is_square_coloring, is_strong_odd};
        let report = match self {
            Param::Chromatic => is_proper(g, phi),
            Param::Odd => is_odd(g, phi),
            Param::StrongOdd => is_strong_odd(g, phi),
            Param::Square => is_square_coloring(g, phi),
        };
        report.map(|r| r.holds()).unwrap_or(false)
    }

    /// Search problem whose solutions are exactly this parameter's colorings.
    pub fn problem(self, g: &Graph) -> Problem {
        let neighborhoods = || (0..g.order()).map(|v| g.neighbors(v).to_vec()).collect();
        match self {
            Param::Chromatic => Problem::new(g.order(), g.edges(), Vec::new(), Parity::None),
            Param::Odd => Problem::new(g.order(), g.edges(), neighborhoods(), Parity::SomeOdd),
            Param::StrongOdd => Problem::new(g.order(), g.edges(), neighborhoods(), Parity::Strong),
            Param::Square => Problem::new(g.order(), square(g).edges(), Vec::new(), Parity::None),
        }
    }

    /// Clique bound valid for every parameter in the chain.
    pub fn lower_bound(self, g: &Graph) -> usize {
        match self {
            Param::Square => square(g).clique_number(),
            _ => g.clique_number(),
        }
    }
}

impl core::str::FromStr for Param {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Param::ALL.into_iter().find(|p| p.name() == s).ok_or(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Best known value: exact when `optimal`, otherwise an upper bound.
    pub value: usize,
    /// Largest k proven (or bounded) to be necessary.
    pub lower_bound: usize,
    pub witness: Coloring,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    /// `[lo, hi]` bracket on the true value.
    pub fn bracket(&self) -> (usize, usize) {
        (self.lower_bound, self.value)
    }
}

/// Exact solver with a budget and an optional clock.
pub struct Solver<'c> {
    budget: Budget,
    clock: &'c dyn Clock,
}

impl Solver<'static> {
    pub fn new(budget: Budget) -> Self {
        Solver {
            budget,
            clock: &NoClock,
        }
    }
}

impl<'c> Solver<'c> {
    pub fn with_clock(budget: Budget, clock: &'c dyn Clock) -> Self {
        Solver { budget, clock }
    }

    fn limits(&self, start: Duration, nodes_used: u64) -> Limits<'c> {
        Limits {
            max_nodes: self.budget.max_nodes.saturating_sub(nodes_used),
            deadline: self.budget.max_time.map(|t| start + t),
            clock: self.clock,
        }
    }

    /// Decide whether `problem` has a solution with at most `k` colors.
    pub fn decide(&self, problem: &Problem, k: usize) -> Result<(Decision, u64), SolveError> {
        if k == 0 {
            return Err(SolveError::ZeroColors);
        }
        let start = self.clock.elapsed();
        Ok(engine::decide(problem, k, &self.limits(start, 0)))
    }

    /// Ascending search from `lower_bound`; rainbow is the fallback witness.
    pub fn minimize(&self, problem: &Problem, lower_bound: usize) -> SolveResult {
        let start = self.clock.elapsed();
        let n = problem.order();
        let mut nodes = 0u64;
        let lo = lower_bound.max(usize::from(n > 0)).min(n);
        if n == 0 {
            return SolveResult {
                value: 0,
                lower_bound: 0,
                witness: Coloring::new(Vec::new()),
                optimal: true,
                nodes_explored: 0,
                elapsed: Duration::ZERO,
            };
        }
        for k in lo..=n {
            let (decision, used) = engine::decide(problem, k, &self.limits(start, nodes));
            nodes += used;
            match decision {
                Decision::Yes(witness) => {
                    return SolveResult {
                        value: witness.k(),
                        lower_bound: witness.k(),
                        witness,
                        optimal: true,
                        nodes_explored: nodes,
                        elapsed: self.clock.elapsed() - start,
                    }
                }
                Decision::No => {}
                Decision::Unknown => {
                    return SolveResult {
                        value: n,
                        lower_bound: k,
                        witness: Coloring::rainbow(n),
                        optimal: false,
                        nodes_explored: nodes,
                        elapsed: self.clock.elapsed() - start,
                    }
                }
            }
        }
        unreachable!("the rainbow coloring satisfies every supported problem")
    }

    pub fn solve(&self, g: &Graph, param: Param) -> SolveResult {
        self.minimize(&param.problem(g), param.lower_bound(g))
    }

    /// Visit every canonical solution with at most `k` colors; stops early
    /// when `visit` returns `false`. Returns `false` if the budget ran out.
    pub fn enumerate(&self, problem: &Problem, k: usize, mut visit: impl FnMut(&Coloring) -> bool) -> bool {
        let start = self.clock.elapsed();
        let stats = engine::enumerate(problem, k, &self.limits(start, 0), |c| {
            visit(&Coloring::new(c.to_vec()))
        });
        !stats.aborted
    }
}

pub fn is_k_strong_odd_colorable(g: &Graph, k: usize, budget: &Budget) -> Result<Decision, SolveError> {
    Solver::new(*budget)
        .decide(&Param::StrongOdd.problem(g), k)
        .map(|(d, _)| d)
}

pub fn chi_exact(g: &Graph, budget: &Budget) -> SolveResult {
    Solver::new(*budget).solve(g, Param::Chromatic)
}

pub fn chi_odd_exact(g: &Graph, budget: &Budget) -> SolveResult {
    Solver::new(*budget).solve(g, Param::Odd)
}

pub fn chi_so_exact(g: &Graph, budget: &Budget) -> SolveResult {
    Solver::new(*budget).solve(g, Param::StrongOdd)
}

pub fn chi_square_exact(g: &Graph, budget: &Budget) -> SolveResult {
    Solver::new(*budget).solve(g, Param::Square)
}
