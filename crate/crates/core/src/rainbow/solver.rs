//! Exact rainbow connection number by iterative deepening over the color
//! count with backtracking over edge color assignments.
//!
//! Symmetry breaking: colors are introduced canonically (a fresh color index
//! may be used only when every smaller index already appears), which fixes
//! the first edge to color 1 and removes the k! permutation factor without
//! losing completeness.
//!
//! Pruning: a partial coloring is abandoned when some nonadjacent pair has no
//! optimistic rainbow path, treating uncolored edges as wildcards that could
//! take any color. On a full assignment the same check has no wildcards and
//! is the exact verifier, so accepted leaves are valid colorings.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{
    rc_lower_bound, EdgeAdjacency, EdgeColoring, RcVerdict, SearchConfig, MAX_TRACKED_COLORS,
};
use crate::error::EngineError;
use crate::graph::UndirectedGraph;

/// Exact rainbow connection number within the configured budgets.
///
/// Returns an exact verdict when the search completes, and a bounds-only
/// verdict (never a wrong exact value) when the edge count, the node budget
/// or the color-tracking limit is exceeded.
pub fn rc_exact(g: &UndirectedGraph, cfg: &SearchConfig) -> Result<RcVerdict, EngineError> {
    if g.vertex_count() < 2 {
        return Err(EngineError::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    let lb = rc_lower_bound(g)?;
    let m = g.edge_count() as u32;
    let mut method = vec![format!("lower bound {} ({})", lb.value, lb.provenance)];

    if g.is_complete() {
        method.push("complete graph: one color suffices".into());
        return Ok(RcVerdict::exact(
            1,
            method,
            Some(EdgeColoring::monochromatic(g)),
        ));
    }

    if g.edge_count() > cfg.max_search_edges {
        method.push(format!(
            "{} edges exceed the search budget of {}; bounds only",
            g.edge_count(),
            cfg.max_search_edges
        ));
        return Ok(bounds_verdict(g, lb.value, m, method));
    }

    let budget = AtomicU64::new(cfg.max_nodes);
    let searcher = Searcher::new(g);
    let mut lower = lb.value;
    for k in lb.value..=m {
        if k == m {
            method.push(if lower == lb.value {
                format!("lower bound already equals the edge count {m}; distinct colors per edge are optimal")
            } else {
                format!("all colorings with fewer than {m} colors refuted; distinct colors per edge are optimal")
            });
            return Ok(RcVerdict::exact(
                m,
                method,
                Some(EdgeColoring::all_distinct(g)),
            ));
        }
        if k as usize > MAX_TRACKED_COLORS {
            method.push(format!(
                "k = {k} exceeds the {MAX_TRACKED_COLORS}-color tracking limit; bounds only"
            ));
            return Ok(bounds_verdict(g, lower, m, method));
        }
        match searcher.search_level(k, &budget, cfg.threads) {
            LevelOutcome::Found(colors) => {
                method.push(format!("backtracking search found a rainbow {k}-coloring"));
                let witness = EdgeColoring::new(g, colors)?;
                debug_assert_eq!(witness.k(), k);
                return Ok(RcVerdict::exact(k, method, Some(witness)));
            }
            LevelOutcome::Exhausted => {
                method.push(format!("search refuted every {k}-coloring"));
                lower = k + 1;
            }
            LevelOutcome::Budget => {
                method.push(format!(
                    "node budget exhausted while testing k = {k}; bounds only"
                ));
                return Ok(bounds_verdict(g, lower, m, method));
            }
        }
    }
    unreachable!("deepening reaches k = m");
}

fn bounds_verdict(g: &UndirectedGraph, lower: u32, upper: u32, method: Vec<String>) -> RcVerdict {
    RcVerdict {
        lower,
        upper,
        exact: (lower == upper).then_some(lower),
        method,
        witness: Some(EdgeColoring::all_distinct(g)),
    }
}

enum LevelOutcome {
    Found(Vec<u32>),
    Exhausted,
    Budget,
}

/// Graph data shared by every search level.
struct Searcher {
    n: usize,
    m: usize,
    adj: EdgeAdjacency,
    /// For each source, the nonadjacent later vertices that need a rainbow
    /// path; adjacent pairs are connected by their own edge.
    targets: Vec<Vec<u32>>,
}

impl Searcher {
    fn new(g: &UndirectedGraph) -> Self {
        let n = g.vertex_count();
        let targets = (0..n)
            .map(|s| {
                ((s + 1)..n)
                    .filter(|&t| !g.is_adjacent(s, t))
                    .map(|t| t as u32)
                    .collect()
            })
            .collect();
        Searcher {
            n,
            m: g.edge_count(),
            adj: EdgeAdjacency::new(g),
            targets,
        }
    }

    fn search_level(&self, k: u32, budget: &AtomicU64, threads: usize) -> LevelOutcome {
        if threads <= 1 || self.m < 4 {
            let mut dfs = Dfs::new(self, k, budget, None);
            return match dfs.run(0, 0) {
                DfsOutcome::Found(c) => LevelOutcome::Found(c),
                DfsOutcome::Exhausted => LevelOutcome::Exhausted,
                DfsOutcome::Budget => LevelOutcome::Budget,
                DfsOutcome::Aborted => unreachable!("no abort flag in sequential mode"),
            };
        }

        // Fan out the canonical prefixes of the first few edges; workers pull
        // tasks and share the node budget and a found flag for early exit.
        let depth = 4.min(self.m);
        let mut prefixes = Vec::new();
        let mut colors = vec![0u32; self.m];
        enumerate_prefixes(&mut colors, 0, depth, 0, k, &mut prefixes);
        let found = AtomicBool::new(false);
        let next = AtomicUsize::new(0);
        let results: Vec<Mutex<Option<DfsOutcome>>> =
            prefixes.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..threads.min(prefixes.len()) {
                scope.spawn(|| loop {
                    let task = next.fetch_add(1, Ordering::Relaxed);
                    if task >= prefixes.len() || found.load(Ordering::Relaxed) {
                        return;
                    }
                    let (prefix, max_used) = &prefixes[task];
                    let mut dfs = Dfs::new(self, k, budget, Some(&found));
                    dfs.colors[..depth].copy_from_slice(&prefix[..depth]);
                    let outcome = dfs.run(depth, *max_used);
                    if matches!(outcome, DfsOutcome::Found(_)) {
                        found.store(true, Ordering::Relaxed);
                    }
                    *results[task].lock().expect("result lock") = Some(outcome);
                });
            }
        });
        let mut saw_budget = false;
        for slot in results {
            match slot.into_inner().expect("result lock") {
                Some(DfsOutcome::Found(c)) => return LevelOutcome::Found(c),
                Some(DfsOutcome::Budget) => saw_budget = true,
                Some(DfsOutcome::Exhausted) | Some(DfsOutcome::Aborted) | None => {}
            }
        }
        if saw_budget {
            LevelOutcome::Budget
        } else {
            LevelOutcome::Exhausted
        }
    }
}

/// Canonical color assignments for edges `0..depth`.
fn enumerate_prefixes(
    colors: &mut Vec<u32>,
    idx: usize,
    depth: usize,
    max_used: u32,
    k: u32,
    out: &mut Vec<(Vec<u32>, u32)>,
) {
    if idx == depth {
        out.push((colors.clone(), max_used));
        return;
    }
    let limit = (max_used + 1).min(k);
    for c in 1..=limit {
        colors[idx] = c;
        enumerate_prefixes(colors, idx + 1, depth, max_used.max(c), k, out);
        colors[idx] = 0;
    }
}

enum DfsOutcome {
    Found(Vec<u32>),
    Exhausted,
    Budget,
    Aborted,
}

struct Dfs<'a> {
    searcher: &'a Searcher,
    k: u32,
    colors: Vec<u32>,
    budget: &'a AtomicU64,
    abort: Option<&'a AtomicBool>,
    // Optimistic-reachability scratch, reused across nodes via epochs.
    states_per_vertex: usize,
    stamp: Vec<u32>,
    wild: Vec<u8>,
    epoch: u32,
    reached_stamp: Vec<u32>,
    deque: VecDeque<(u32, u8)>,
}

impl<'a> Dfs<'a> {
    fn new(
        searcher: &'a Searcher,
        k: u32,
        budget: &'a AtomicU64,
        abort: Option<&'a AtomicBool>,
    ) -> Self {
        let states_per_vertex = 1usize << k;
        Dfs {
            searcher,
            k,
            colors: vec![0; searcher.m],
            budget,
            abort,
            states_per_vertex,
            stamp: vec![0; searcher.n * states_per_vertex],
            wild: vec![0; searcher.n * states_per_vertex],
            epoch: 0,
            reached_stamp: vec![0; searcher.n],
            deque: VecDeque::new(),
        }
    }

    fn run(&mut self, idx: usize, max_used: u32) -> DfsOutcome {
        if let Some(flag) = self.abort {
            if flag.load(Ordering::Relaxed) {
                return DfsOutcome::Aborted;
            }
        }
        if self
            .budget
            .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |b| b.checked_sub(1))
            .is_err()
        {
            return DfsOutcome::Budget;
        }
        if !self.feasible() {
            return DfsOutcome::Exhausted;
        }
        if idx == self.searcher.m {
            // No wildcards left, so the feasibility check was exact.
            return DfsOutcome::Found(self.colors.clone());
        }
        let limit = (max_used + 1).min(self.k);
        for c in 1..=limit {
            self.colors[idx] = c;
            match self.run(idx + 1, max_used.max(c)) {
                DfsOutcome::Exhausted => {}
                other => {
                    self.colors[idx] = 0;
                    return other;
                }
            }
        }
        self.colors[idx] = 0;
        DfsOutcome::Exhausted
    }

    /// Whether every nonadjacent pair still has an optimistic rainbow path:
    /// colored edges must contribute pairwise distinct colors, uncolored
    /// edges count as wildcards, and the total stays within k. Runs a 0-1
    /// BFS per source over (vertex, colored-mask) states, minimizing the
    /// wildcard count per state.
    fn feasible(&mut self) -> bool {
        for s in 0..self.searcher.n {
            if self.searcher.targets[s].is_empty() {
                continue;
            }
            if !self.source_reaches_targets(s) {
                return false;
            }
        }
        true
    }

    fn source_reaches_targets(&mut self, s: usize) -> bool {
        self.epoch = match self.epoch.checked_add(1) {
            Some(e) => e,
            None => {
                self.stamp.fill(0);
                self.reached_stamp.fill(0);
                1
            }
        };
        let epoch = self.epoch;
        let spv = self.states_per_vertex;
        let mut remaining = self.searcher.targets[s].len();
        self.deque.clear();
        let start = s * spv;
        self.stamp[start] = epoch;
        self.wild[start] = 0;
        self.reached_stamp[s] = epoch;
        self.deque.push_back((start as u32, 0));
        while let Some((state, w)) = self.deque.pop_front() {
            let state = state as usize;
            if self.stamp[state] == epoch && self.wild[state] < w {
                continue; // stale entry
            }
            let v = state / spv;
            let mask = (state % spv) as u32;
            for &(u, eidx) in &self.searcher.adj.nbr[v] {
                let color = self.colors[eidx as usize];
                let (nmask, nw) = if color == 0 {
                    (mask, w + 1)
                } else {
                    let bit = 1u32 << (color - 1);
                    if mask & bit != 0 {
                        continue;
                    }
                    (mask | bit, w)
                };
                if nw as u32 + nmask.count_ones() > self.k {
                    continue;
                }
                let nstate = u as usize * spv + nmask as usize;
                if self.stamp[nstate] != epoch || self.wild[nstate] > nw {
                    self.stamp[nstate] = epoch;
                    self.wild[nstate] = nw;
                    if self.reached_stamp[u as usize] != epoch {
                        self.reached_stamp[u as usize] = epoch;
                        if self.searcher.targets[s].binary_search(&u).is_ok() {
                            remaining -= 1;
                            if remaining == 0 {
                                return true;
                            }
                        }
                    }
                    if nw == w {
                        self.deque.push_front((nstate as u32, nw));
                    } else {
                        self.deque.push_back((nstate as u32, nw));
                    }
                }
            }
        }
        remaining == 0
    }
}
