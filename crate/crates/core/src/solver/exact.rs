//! Exact `χ_r` by iterative deepening on `k` with backtracking.
//!
//! Vertices are colored in BFS order from a maximum-degree vertex. A new
//! color may only be opened as `max_used + 1`, which removes palette
//! permutations. Partial assignments are cut when an edge is monochromatic
//! or when some vertex `w` can no longer reach `min(r, d(w))` distinct
//! neighbor colors: `distinct(w) + uncolored(w) < min(r, d(w))`.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{greedy_clique_bound, lai_lower_bound, lemma1_scan};
use crate::coloring::{Color, Coloring};
use crate::error::{invalid_param, Error, Result};
use crate::graph::{Graph, VertexId};

pub const MAX_SOLVER_VERTICES: usize = 64;
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of search-tree nodes across all values of `k`.
    pub budget: u64,
    /// Explore independent subtrees on the rayon pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: DEFAULT_BUDGET,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub chi: usize,
    pub witness: Coloring,
    pub lower_bounds: Vec<NamedBound>,
    pub nodes_explored: u64,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exhausted {
    /// Every `k` below this value was refuted.
    pub lower_bound: usize,
    /// The rainbow coloring always works.
    pub upper_bound: usize,
    pub lower_bounds: Vec<NamedBound>,
    pub nodes_explored: u64,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(SolveResult),
    BudgetExhausted(Exhausted),
}

impl SolveOutcome {
    pub fn chi(&self) -> Option<usize> {
        match self {
            SolveOutcome::Solved(res) => Some(res.chi),
            SolveOutcome::BudgetExhausted(_) => None,
        }
    }

    pub fn solved(self) -> Option<SolveResult> {
        match self {
            SolveOutcome::Solved(res) => Some(res),
            SolveOutcome::BudgetExhausted(_) => None,
        }
    }

    pub fn nodes_explored(&self) -> u64 {
        match self {
            SolveOutcome::Solved(res) => res.nodes_explored,
            SolveOutcome::BudgetExhausted(ex) => ex.nodes_explored,
        }
    }
}

/// BFS from the lowest-indexed maximum-degree vertex, neighbors ascending.
pub fn search_order(g: &Graph) -> Vec<VertexId> {
    let delta = g.max_degree();
    let start = (0..g.vertex_count())
        .find(|&v| g.adj(v).len() == delta)
        .unwrap_or(0);
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.adj(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

/// Shared node budget. Workers flush their local counts in batches.
struct Budget {
    limit: u64,
    used: AtomicU64,
    aborted: AtomicBool,
}

const FLUSH: u64 = 4096;

struct Search<'a> {
    g: &'a Graph,
    order: &'a [VertexId],
    k: usize,
    need: Vec<u8>,
    color: Vec<u8>,
    /// `counts[v * (k + 1) + c]`: colored neighbors of `v` with color `c`.
    counts: Vec<u8>,
    distinct: Vec<u8>,
    uncolored: Vec<u8>,
    budget: &'a Budget,
    /// Serial runs check the budget on every node; parallel runs flush in batches.
    exact_budget: bool,
    start_used: u64,
    pending: u64,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(
        g: &'a Graph,
        order: &'a [VertexId],
        k: usize,
        r: usize,
        budget: &'a Budget,
        exact_budget: bool,
    ) -> Self {
        let n = g.vertex_count();
        Search {
            g,
            order,
            k,
            need: (0..n).map(|v| r.min(g.adj(v).len()) as u8).collect(),
            color: vec![0; n],
            counts: vec![0; n * (k + 1)],
            distinct: vec![0; n],
            uncolored: (0..n).map(|v| g.adj(v).len() as u8).collect(),
            budget,
            exact_budget,
            start_used: budget.used.load(Ordering::Relaxed),
            pending: 0,
            nodes: 0,
        }
    }

    #[inline]
    fn slot(&self, v: VertexId, c: usize) -> usize {
        v * (self.k + 1) + c
    }

    /// Colors `v` with `c` (which must not clash with a neighbor) and reports
    /// whether every neighbor can still meet its requirement.
    fn assign(&mut self, v: VertexId, c: usize) -> bool {
        self.color[v] = c as u8;
        let mut ok = true;
        for &w in self.g.adj(v) {
            let s = self.slot(w, c);
            self.counts[s] += 1;
            if self.counts[s] == 1 {
                self.distinct[w] += 1;
            }
            self.uncolored[w] -= 1;
            if self.distinct[w] + self.uncolored[w] < self.need[w] {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, v: VertexId) {
        let c = self.color[v] as usize;
        self.color[v] = 0;
        for &w in self.g.adj(v) {
            let s = self.slot(w, c);
            self.counts[s] -= 1;
            if self.counts[s] == 0 {
                self.distinct[w] -= 1;
            }
            self.uncolored[w] += 1;
        }
    }

    #[inline]
    fn clashes(&self, v: VertexId, c: usize) -> bool {
        self.counts[self.slot(v, c)] > 0
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.pending += 1;
        if self.exact_budget {
            if self.start_used + self.nodes > self.budget.limit {
                self.budget.aborted.store(true, Ordering::Relaxed);
                return false;
            }
            return true;
        }
        if self.pending >= FLUSH {
            self.flush();
        }
        !self.budget.aborted.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.budget.used.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total > self.budget.limit {
            self.budget.aborted.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&mut self, depth: usize, max_used: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.clashes(v, c) {
                continue;
            }
            if !self.tick() {
                return Step::Aborted;
            }
            if self.assign(v, c) {
                match self.dfs(depth + 1, max_used.max(c)) {
                    Step::Found => return Step::Found,
                    Step::Aborted => {
                        self.unassign(v);
                        return Step::Aborted;
                    }
                    Step::Exhausted => {}
                }
            }
            self.unassign(v);
        }
        Step::Exhausted
    }

    /// Feasible assignments of the first `depth` vertices, in DFS order.
    fn prefixes(&mut self, depth: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(depth);
        self.collect_prefixes(0, 0, depth, &mut current, &mut out);
        out
    }

    fn collect_prefixes(
        &mut self,
        at: usize,
        max_used: usize,
        depth: usize,
        current: &mut Vec<u8>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if at == depth {
            out.push(current.clone());
            return;
        }
        let v = self.order[at];
        for c in 1..=(max_used + 1).min(self.k) {
            if self.clashes(v, c) {
                continue;
            }
            if self.assign(v, c) {
                current.push(c as u8);
                self.collect_prefixes(at + 1, max_used.max(c), depth, current, out);
                current.pop();
            }
            self.unassign(v);
        }
    }

    fn witness(&self) -> Vec<Color> {
        self.color.iter().map(|&c| c as Color).collect()
    }
}

/// Searches for a conditional `(k, r)`-coloring. `Ok(None)` means none exists.
fn feasible(
    g: &Graph,
    order: &[VertexId],
    k: usize,
    r: usize,
    budget: &Budget,
    parallel: bool,
) -> std::result::Result<Option<Vec<Color>>, ()> {
    let n = g.vertex_count();
    let split = if parallel { n.min(6) } else { 0 };
    if split == 0 {
        let mut search = Search::new(g, order, k, r, budget, true);
        let step = search.dfs(0, 0);
        search.flush();
        return match step {
            Step::Found => Ok(Some(search.witness())),
            Step::Exhausted => Ok(None),
            Step::Aborted => Err(()),
        };
    }
    let prefixes = Search::new(g, order, k, r, budget, false).prefixes(split);
    let first = prefixes.par_iter().find_map_first(|prefix| {
        let mut search = Search::new(g, order, k, r, budget, false);
        let mut max_used = 0;
        for (depth, &c) in prefix.iter().enumerate() {
            search.assign(order[depth], c as usize);
            max_used = max_used.max(c as usize);
        }
        let step = search.dfs(prefix.len(), max_used);
        search.flush();
        match step {
            Step::Found => Some(Ok(search.witness())),
            Step::Aborted => Some(Err(())),
            Step::Exhausted => None,
        }
    });
    match first {
        Some(Ok(w)) => Ok(Some(w)),
        Some(Err(())) => Err(()),
        None if budget.aborted.load(Ordering::Relaxed) => Err(()),
        None => Ok(None),
    }
}

/// Lower bounds applied before the search; the lemma bound only when `r <= Δ`.
pub fn starting_bounds(g: &Graph, r: usize) -> Vec<NamedBound> {
    let mut bounds = vec![
        NamedBound {
            name: "lai",
            value: lai_lower_bound(g, r),
        },
        NamedBound {
            name: "clique",
            value: greedy_clique_bound(g),
        },
    ];
    if let Ok(scan) = lemma1_scan(g, r) {
        bounds.push(NamedBound {
            name: "lemma1",
            value: scan.bound,
        });
    }
    bounds
}

/// Exact `χ_r(g)` with a witness coloring onto `1..=χ_r`.
pub fn chi_r_exact(g: &Graph, r: usize, options: SolveOptions) -> Result<SolveOutcome> {
    if r < 1 {
        return Err(invalid_param("r must be >= 1"));
    }
    let n = g.vertex_count();
    if n > MAX_SOLVER_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: MAX_SOLVER_VERTICES,
        });
    }
    if !g.is_connected() {
        return Err(invalid_param("exact solver needs a connected graph"));
    }
    let started = Instant::now();
    let lower_bounds = starting_bounds(g, r);
    let start_k = lower_bounds
        .iter()
        .map(|b| b.value)
        .max()
        .unwrap_or(1)
        .clamp(1, n);
    let order = search_order(g);
    let budget = Budget {
        limit: options.budget,
        used: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    for k in start_k..=n {
        match feasible(g, &order, k, r, &budget, options.parallel) {
            Ok(Some(colors)) => {
                let witness = Coloring::new(colors, k as Color)?.compacted();
                return Ok(SolveOutcome::Solved(SolveResult {
                    chi: witness.k() as usize,
                    witness,
                    lower_bounds,
                    nodes_explored: budget.used.load(Ordering::Relaxed),
                    elapsed: started.elapsed(),
                }));
            }
            Ok(None) => {}
            Err(()) => {
                return Ok(SolveOutcome::BudgetExhausted(Exhausted {
                    lower_bound: k,
                    upper_bound: n,
                    lower_bounds,
                    nodes_explored: budget.used.load(Ordering::Relaxed),
                    elapsed: started.elapsed(),
                }))
            }
        }
    }
    unreachable!("the rainbow coloring is a conditional (n, r)-coloring")
}

/// `χ(g) = χ_1(g)`.
pub fn chromatic_number(g: &Graph, options: SolveOptions) -> Result<SolveOutcome> {
    chi_r_exact(g, 1, options)
}
