//! Exact and heuristic computation of the k-forcing number `F_k(G)`.
//!
//! Three routes are provided:
//!
//! * [`brute_force_oracle`] tries every subset by increasing size. It is the
//!   reference the faster search is checked against.
//! * [`solve`] searches subsets by increasing size as well, but builds them
//!   vertex by vertex in increasing id order and never adds a vertex that is
//!   already inside the closure of the partial set. At the optimum size such
//!   a set could drop that vertex and still force, so no minimum forcing set
//!   is skipped and the first hit is still the lexicographically smallest one.
//! * [`greedy_upper_bound`] grows a forcing set one vertex at a time and caps
//!   the exact search.
//!
//! [`solve_connected_complement`] restricts the search to sets whose
//! complement induces a connected subgraph.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forcing::{closure_set, is_forcing_set};
use crate::graph::Graph;
use crate::vertex_set::{subsets_of_size, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Bnb,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    /// Size of the witness; `F_k(G)` for the exact methods.
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
    /// Set by [`solve_connected_complement`].
    pub constrained: bool,
    /// Set when the constrained search could only return `V(G)` itself.
    #[serde(default)]
    pub empty_complement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
    /// Split the exact search across the rayon pool. The value and witness do
    /// not depend on this; `nodes_explored` may.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: None,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    Nodes,
    WallClock,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The search stopped before proving an optimum. Every size below
    /// `lower_bound` has been excluded; `upper_bound` is the best forcing set
    /// known when the search stopped, if any.
    #[error(
        "search aborted ({limit:?} budget) after {nodes} nodes; \
         F_k lies in [{lower_bound}, {}]",
        upper_bound.as_ref().map_or("?".to_string(), |r| r.value.to_string())
    )]
    BudgetExceeded {
        limit: Limit,
        nodes: u64,
        lower_bound: usize,
        upper_bound: Option<Box<SolveResult>>,
    },

    #[error("forcing parameter k must be at least 1")]
    ZeroK,
}

struct Budget {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    tripped: AtomicBool,
    reason: AtomicU64,
}

impl Budget {
    fn new(config: &SolverConfig) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            max_nodes: config.node_budget,
            deadline: config.time_budget.map(|d| Instant::now() + d),
            tripped: AtomicBool::new(false),
            reason: AtomicU64::new(0),
        }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    fn tick(&self) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.max_nodes {
            self.trip(Limit::Nodes);
            return false;
        }
        if used.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.trip(Limit::WallClock);
                    return false;
                }
            }
        }
        true
    }

    fn trip(&self, limit: Limit) {
        if !self.tripped.swap(true, Ordering::Relaxed) {
            self.reason.store(limit as u64, Ordering::Relaxed);
        }
    }

    fn used(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max_nodes)
    }

    fn abort(&self, lower_bound: usize, upper_bound: Option<SolveResult>) -> SolveError {
        let limit = if self.reason.load(Ordering::Relaxed) == Limit::WallClock as u64 {
            Limit::WallClock
        } else {
            Limit::Nodes
        };
        SolveError::BudgetExceeded {
            limit,
            nodes: self.used(),
            lower_bound,
            upper_bound: upper_bound.map(Box::new),
        }
    }
}

/// A forcing set needs a vertex that can fire first: it and all but at most
/// `k` of its neighbours are in the set.
pub fn trivial_lower_bound(g: &Graph, k: usize) -> usize {
    if g.order() == 0 {
        return 0;
    }
    (g.min_degree() + 1).saturating_sub(k).max(1)
}

fn check_k(k: usize) -> Result<(), SolveError> {
    if k == 0 {
        Err(SolveError::ZeroK)
    } else {
        Ok(())
    }
}

fn empty_graph_result(method: Method, constrained: bool) -> SolveResult {
    SolveResult {
        value: 0,
        witness: VertexSet::EMPTY,
        nodes_explored: 0,
        method,
        constrained,
        empty_complement: constrained,
    }
}

pub fn brute_force_oracle(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    brute_force_oracle_with(g, k, &SolverConfig::default())
}

/// Tries every subset, smallest sizes first and lexicographically within a
/// size, and returns the first forcing set.
pub fn brute_force_oracle_with(
    g: &Graph,
    k: usize,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    check_k(k)?;
    let n = g.order();
    if n == 0 {
        return Ok(empty_graph_result(Method::Oracle, false));
    }
    let budget = Budget::new(config);
    for size in 1..=n {
        for s in subsets_of_size(g.vertices(), size) {
            if !budget.tick() {
                return Err(budget.abort(size, None));
            }
            if is_forcing_set(g, k, s) {
                return Ok(SolveResult {
                    value: size,
                    witness: s,
                    nodes_explored: budget.used(),
                    method: Method::Oracle,
                    constrained: false,
                    empty_complement: false,
                });
            }
        }
    }
    unreachable!("V(G) always forces")
}

/// Grows a forcing set by repeatedly adding the non-coloured vertex whose
/// addition colours the most vertices, smallest id on ties.
pub fn greedy_upper_bound(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    check_k(k)?;
    let all = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    let mut colored = VertexSet::EMPTY;
    let mut evaluations = 0u64;
    while colored != all {
        let mut best: Option<(usize, usize, VertexSet)> = None;
        for v in all.difference(colored) {
            let grown = closure_set(g, k, colored.with(v));
            evaluations += 1;
            if best.is_none_or(|(size, _, _)| grown.len() > size) {
                best = Some((grown.len(), v, grown));
            }
        }
        let (_, v, grown) = best.expect("some vertex is uncoloured");
        chosen.insert(v);
        colored = grown;
    }
    Ok(SolveResult {
        value: chosen.len(),
        witness: chosen,
        nodes_explored: evaluations,
        method: Method::Greedy,
        constrained: false,
        empty_complement: false,
    })
}

pub fn solve(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve_with(g, k, &SolverConfig::default())
}

/// Exact `F_k(G)` with the lexicographically smallest minimum witness.
pub fn solve_with(g: &Graph, k: usize, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    check_k(k)?;
    if g.order() == 0 {
        return Ok(empty_graph_result(Method::Bnb, false));
    }
    let greedy = greedy_upper_bound(g, k)?;
    let lower = trivial_lower_bound(g, k);
    let budget = Budget::new(config);
    let search = SizedSearch {
        g,
        k,
        budget: &budget,
    };
    for size in lower..=greedy.value {
        let found = if config.parallel {
            search.run_parallel(size)
        } else {
            search.run(size)
        };
        match found {
            Some(witness) => {
                return Ok(SolveResult {
                    value: size,
                    witness,
                    nodes_explored: budget.used(),
                    method: Method::Bnb,
                    constrained: false,
                    empty_complement: false,
                })
            }
            None if budget.tripped.load(Ordering::Relaxed) => {
                return Err(budget.abort(size, Some(greedy)));
            }
            None => {}
        }
    }
    // Only reachable if the greedy set is not forcing, which closure
    // monotonicity rules out.
    unreachable!("greedy witness of size {} was not matched", greedy.value)
}

struct SizedSearch<'a> {
    g: &'a Graph,
    k: usize,
    budget: &'a Budget,
}

impl SizedSearch<'_> {
    fn run(&self, size: usize) -> Option<VertexSet> {
        self.extend(VertexSet::EMPTY, VertexSet::EMPTY, 0, size)
    }

    /// Splits on the smallest member. `find_map_first` keeps the result equal
    /// to the sequential one.
    fn run_parallel(&self, size: usize) -> Option<VertexSet> {
        let n = self.g.order();
        if size == 0 {
            return self.run(0);
        }
        (0..=n - size).into_par_iter().find_map_first(|first| {
            if !self.budget.tick() {
                return None;
            }
            let partial = VertexSet::singleton(first);
            let closed = closure_set(self.g, self.k, partial);
            self.extend(partial, closed, first + 1, size - 1)
        })
    }

    /// Depth-first over supersets of `partial` whose remaining members are
    /// at least `next_min` and outside `closed`, the closure of `partial`.
    fn extend(
        &self,
        partial: VertexSet,
        closed: VertexSet,
        next_min: usize,
        remaining: usize,
    ) -> Option<VertexSet> {
        let all = self.g.vertices();
        if remaining == 0 {
            return (closed == all).then_some(partial);
        }
        if !self.budget.tick() {
            return None;
        }
        let below = 1u64
            .checked_shl(next_min as u32)
            .map_or(u64::MAX, |bit| bit - 1);
        let above = VertexSet::from_bits(all.bits() & !below);
        let candidates = above.difference(closed);
        if candidates.len() < remaining {
            return None;
        }
        // Even taking every candidate must be able to colour everything.
        if closure_set(self.g, self.k, closed.union(candidates)) != all {
            return None;
        }
        let mut left = candidates.len();
        for v in candidates {
            if left < remaining {
                break;
            }
            left -= 1;
            let next_closed = closure_set(self.g, self.k, closed.with(v));
            if let Some(found) = self.extend(partial.with(v), next_closed, v + 1, remaining - 1) {
                return Some(found);
            }
            if self.budget.tripped.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }
}

pub fn solve_connected_complement(g: &Graph, k: usize) -> Result<SolveResult, SolveError> {
    solve_connected_complement_with(g, k, &SolverConfig::default())
}

/// Minimum k-forcing set whose complement induces a connected subgraph, by
/// restricted subset search. The closure pruning of [`solve`] does not carry
/// over: dropping a vertex from the set can disconnect the complement.
///
/// If only `V(G)` qualifies, the result carries `empty_complement = true`.
pub fn solve_connected_complement_with(
    g: &Graph,
    k: usize,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    check_k(k)?;
    let n = g.order();
    if n == 0 {
        return Ok(empty_graph_result(Method::Oracle, true));
    }
    let budget = Budget::new(config);
    let all = g.vertices();
    for size in trivial_lower_bound(g, k)..=n {
        for s in subsets_of_size(all, size) {
            if !budget.tick() {
                return Err(budget.abort(size, None));
            }
            if g.induces_connected(s.complement(n)) && is_forcing_set(g, k, s) {
                return Ok(SolveResult {
                    value: size,
                    witness: s,
                    nodes_explored: budget.used(),
                    method: Method::Oracle,
                    constrained: true,
                    empty_complement: size == n,
                });
            }
        }
    }
    unreachable!("V(G) always qualifies")
}
