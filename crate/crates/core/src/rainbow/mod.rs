//! Rainbow connectivity: coloring verification, bounds, and the exact solver.
//!
//! The verifier answers "does every vertex pair have a path whose edge colors
//! are pairwise distinct" exactly, by BFS over (vertex, used-color-set)
//! states. Only colors appearing on two or more edges need a set bit: a color
//! that occurs on a single edge can never repeat along a simple path, so the
//! state space stays small even for colorings with many pendant colors.

mod solver;

pub use solver::rc_exact;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::VecDeque;

use crate::error::EngineError;
use crate::graph::UndirectedGraph;

/// Most colors the state-space search will track per walk.
pub const MAX_TRACKED_COLORS: usize = 16;

/// An edge coloring of a specific graph: one color in `1..=k` per canonical
/// edge, with every color in that range actually used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    k: u32,
}

impl EdgeColoring {
    /// Validates a color vector parallel to `g.edges()`.
    pub fn new(g: &UndirectedGraph, colors: Vec<u32>) -> Result<Self, EngineError> {
        if colors.len() != g.edge_count() {
            return Err(EngineError::ColoringIncomplete(format!(
                "{} colors for {} edges",
                colors.len(),
                g.edge_count()
            )));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k as usize + 1];
        for &c in &colors {
            if c == 0 {
                return Err(EngineError::ColorOutOfRange { color: 0, k });
            }
            used[c as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c as usize]) {
            return Err(EngineError::ColoringIncomplete(format!(
                "color {missing} unused; colors must form 1..=k"
            )));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// All edges colored 1.
    pub fn monochromatic(g: &UndirectedGraph) -> Self {
        EdgeColoring {
            colors: vec![1; g.edge_count()],
            k: if g.edge_count() == 0 { 0 } else { 1 },
        }
    }

    /// Every edge its own color, in canonical edge order.
    pub fn all_distinct(g: &UndirectedGraph) -> Self {
        EdgeColoring {
            colors: (1..=g.edge_count() as u32).collect(),
            k: g.edge_count() as u32,
        }
    }

    /// Builds a coloring from `(u, v, color)` triples covering every edge
    /// exactly once.
    pub fn from_triples(
        g: &UndirectedGraph,
        triples: &[(usize, usize, u32)],
    ) -> Result<Self, EngineError> {
        let mut colors = vec![0u32; g.edge_count()];
        for &(u, v, color) in triples {
            let idx = g.edge_index(u, v).ok_or_else(|| {
                EngineError::ColoringIncomplete(format!("({u},{v}) is not an edge"))
            })?;
            if colors[idx] != 0 {
                return Err(EngineError::ColoringIncomplete(format!(
                    "edge ({u},{v}) colored twice"
                )));
            }
            colors[idx] = color;
        }
        if let Some(idx) = colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[idx];
            return Err(EngineError::ColoringIncomplete(format!(
                "edge ({u},{v}) has no color"
            )));
        }
        EdgeColoring::new(g, colors)
    }

    /// Number of distinct colors.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn color_of_index(&self, edge_idx: usize) -> u32 {
        self.colors[edge_idx]
    }

    pub fn color_of_edge(&self, g: &UndirectedGraph, u: usize, v: usize) -> Option<u32> {
        g.edge_index(u, v).map(|i| self.colors[i])
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    fn check_matches(&self, g: &UndirectedGraph) -> Result<(), EngineError> {
        if self.colors.len() != g.edge_count() {
            return Err(EngineError::ColoringIncomplete(format!(
                "{} colors for {} edges",
                self.colors.len(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// Adjacency list with edge indices, shared by the verifier and the solver.
pub(crate) struct EdgeAdjacency {
    pub nbr: Vec<Vec<(u32, u32)>>, // (neighbor, edge index)
}

impl EdgeAdjacency {
    pub fn new(g: &UndirectedGraph) -> Self {
        let mut nbr = vec![Vec::new(); g.vertex_count()];
        for (idx, &(u, v)) in g.edges().iter().enumerate() {
            nbr[u].push((v as u32, idx as u32));
            nbr[v].push((u as u32, idx as u32));
        }
        EdgeAdjacency { nbr }
    }
}

/// Outcome of a rainbow-connectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowCheck {
    pub connected: bool,
    /// Every unordered pair with no rainbow path, `(u, v)` with `u < v`.
    pub failing_pairs: Vec<(usize, usize)>,
}

/// Maps each color to a tracked bit, or `None` for colors on a single edge.
fn tracked_bits(c: &EdgeColoring) -> Result<Vec<Option<u8>>, EngineError> {
    let mut multiplicity = vec![0u32; c.k as usize + 1];
    for &color in &c.colors {
        multiplicity[color as usize] += 1;
    }
    let mut bits = vec![None; c.k as usize + 1];
    let mut next = 0u8;
    for color in 1..=c.k as usize {
        if multiplicity[color] >= 2 {
            bits[color] = Some(next);
            next += 1;
        }
    }
    if next as usize > MAX_TRACKED_COLORS {
        return Err(EngineError::TooManyColors {
            constrained: next as usize,
            max: MAX_TRACKED_COLORS,
        });
    }
    Ok(bits)
}

/// Exact rainbow-connectivity verdict with the list of failing pairs.
///
/// A pair fails when no path between it has pairwise distinct edge colors.
pub fn is_rainbow_connected(
    g: &UndirectedGraph,
    c: &EdgeColoring,
) -> Result<RainbowCheck, EngineError> {
    c.check_matches(g)?;
    let n = g.vertex_count();
    let bits = tracked_bits(c)?;
    let tracked = bits.iter().flatten().count() as u32;
    let adj = EdgeAdjacency::new(g);

    let mut failing = Vec::new();
    let states_per_vertex = 1usize << tracked;
    let mut seen = FixedBitSet::with_capacity(n * states_per_vertex);
    let mut reached = FixedBitSet::with_capacity(n);
    let mut queue = VecDeque::new();

    for s in 0..n {
        seen.clear();
        reached.clear();
        queue.clear();
        queue.push_back((s as u32, 0u32));
        seen.insert(s * states_per_vertex);
        reached.insert(s);
        let mut reached_count = 1;
        while let Some((v, mask)) = queue.pop_front() {
            for &(u, eidx) in &adj.nbr[v as usize] {
                let next_mask = match bits[c.colors[eidx as usize] as usize] {
                    Some(bit) => {
                        if mask & (1 << bit) != 0 {
                            continue;
                        }
                        mask | (1 << bit)
                    }
                    None => mask,
                };
                let state = u as usize * states_per_vertex + next_mask as usize;
                if !seen.contains(state) {
                    seen.insert(state);
                    if !reached.contains(u as usize) {
                        reached.insert(u as usize);
                        reached_count += 1;
                    }
                    queue.push_back((u, next_mask));
                }
            }
            if reached_count == n {
                break;
            }
        }
        for t in (s + 1)..n {
            if !reached.contains(t) {
                failing.push((s, t));
            }
        }
    }
    Ok(RainbowCheck {
        connected: failing.is_empty(),
        failing_pairs: failing,
    })
}

/// Reconstructs one rainbow path between `s` and `t` under `c`, or `None`
/// when no such path exists.
pub fn rainbow_path(
    g: &UndirectedGraph,
    c: &EdgeColoring,
    s: usize,
    t: usize,
) -> Result<Option<Vec<usize>>, EngineError> {
    c.check_matches(g)?;
    if s == t {
        return Ok(Some(vec![s]));
    }
    let n = g.vertex_count();
    let bits = tracked_bits(c)?;
    let tracked = bits.iter().flatten().count() as u32;
    let adj = EdgeAdjacency::new(g);
    let states_per_vertex = 1usize << tracked;

    let mut pred: Vec<Option<(u32, u32)>> = vec![None; n * states_per_vertex];
    let mut seen = FixedBitSet::with_capacity(n * states_per_vertex);
    let start = s * states_per_vertex;
    seen.insert(start);
    let mut queue = VecDeque::from([(s as u32, 0u32)]);
    let mut goal_state = None;
    'bfs: while let Some((v, mask)) = queue.pop_front() {
        for &(u, eidx) in &adj.nbr[v as usize] {
            let next_mask = match bits[c.colors[eidx as usize] as usize] {
                Some(bit) => {
                    if mask & (1 << bit) != 0 {
                        continue;
                    }
                    mask | (1 << bit)
                }
                None => mask,
            };
            let state = u as usize * states_per_vertex + next_mask as usize;
            if !seen.contains(state) {
                seen.insert(state);
                pred[state] = Some((v * states_per_vertex as u32 + mask, eidx));
                if u as usize == t {
                    goal_state = Some(state);
                    break 'bfs;
                }
                queue.push_back((u, next_mask));
            }
        }
    }
    let Some(mut state) = goal_state else {
        return Ok(None);
    };
    // Unwind the walk, then cut loops at repeated vertices.
    let mut walk = vec![t];
    while state != start {
        let (prev, _) = pred[state].expect("predecessor recorded");
        state = prev as usize;
        walk.push(state / states_per_vertex);
    }
    walk.reverse();
    let mut path: Vec<usize> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(pos) = path.iter().position(|&p| p == v) {
            path.truncate(pos + 1);
        } else {
            path.push(v);
        }
    }
    debug_assert!(is_rainbow_path(g, c, &path));
    Ok(Some(path))
}

fn is_rainbow_path(g: &UndirectedGraph, c: &EdgeColoring, path: &[usize]) -> bool {
    let mut used = std::collections::HashSet::new();
    for w in path.windows(2) {
        match c.color_of_edge(g, w[0], w[1]) {
            Some(color) => {
                if !used.insert(color) {
                    return false;
                }
            }
            None => return false,
        }
    }
    true
}

/// A lower bound on the rainbow connection number with its justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: u32,
    pub provenance: String,
}

/// `max(diameter, pendant count, 2 unless complete)` for a connected graph
/// on at least two vertices.
pub fn rc_lower_bound(g: &UndirectedGraph) -> Result<LowerBound, EngineError> {
    if g.vertex_count() < 2 {
        return Err(EngineError::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    if g.is_complete() {
        return Ok(LowerBound {
            value: 1,
            provenance: "complete graph".into(),
        });
    }
    let diam = g.diameter().map_err(|_| EngineError::Disconnected)? as u32;
    let pendants = g.pendant_count() as u32;
    let mut best = LowerBound {
        value: 2,
        provenance: "not complete".into(),
    };
    if diam > best.value {
        best = LowerBound {
            value: diam,
            provenance: format!("diameter {diam}"),
        };
    }
    if pendants > best.value {
        best = LowerBound {
            value: pendants,
            provenance: format!("{pendants} pendant vertices"),
        };
    }
    Ok(best)
}

/// Verdict on the rainbow connection number of a graph: bounds, optional
/// exact value, the chain of arguments used, and an optional witness
/// coloring achieving the upper bound.
#[derive(Clone, Debug)]
pub struct RcVerdict {
    pub lower: u32,
    pub upper: u32,
    pub exact: Option<u32>,
    pub method: Vec<String>,
    pub witness: Option<EdgeColoring>,
}

impl RcVerdict {
    pub(crate) fn exact(value: u32, method: Vec<String>, witness: Option<EdgeColoring>) -> Self {
        RcVerdict {
            lower: value,
            upper: value,
            exact: Some(value),
            method,
            witness,
        }
    }

    /// Internal consistency: bounds ordered and witness matching the upper
    /// bound, verified against the graph.
    pub fn validate(&self, g: &UndirectedGraph) -> Result<(), EngineError> {
        if self.lower < 1 || self.lower > self.upper {
            return Err(EngineError::InvalidParameter(format!(
                "bounds [{}, {}] out of order",
                self.lower, self.upper
            )));
        }
        if let Some(exact) = self.exact {
            if exact != self.lower || exact != self.upper {
                return Err(EngineError::InvalidParameter(
                    "exact verdict must pin both bounds".into(),
                ));
            }
        }
        if let Some(witness) = &self.witness {
            if witness.k() != self.upper {
                return Err(EngineError::InvalidParameter(format!(
                    "witness uses {} colors but upper bound is {}",
                    witness.k(),
                    self.upper
                )));
            }
            let check = is_rainbow_connected(g, witness)?;
            if !check.connected {
                return Err(EngineError::NotRainbowConnected {
                    failing: check.failing_pairs.len(),
                });
            }
        }
        Ok(())
    }
}

/// Upper-bound contribution from a coloring that must verify.
pub fn rc_upper_from_coloring(
    g: &UndirectedGraph,
    c: &EdgeColoring,
) -> Result<RcVerdict, EngineError> {
    let check = is_rainbow_connected(g, c)?;
    if !check.connected {
        return Err(EngineError::NotRainbowConnected {
            failing: check.failing_pairs.len(),
        });
    }
    let lb = rc_lower_bound(g)?;
    let upper = c.k();
    let exact = (lb.value == upper).then_some(upper);
    Ok(RcVerdict {
        lower: lb.value,
        upper,
        exact,
        method: vec![
            format!("lower bound {} ({})", lb.value, lb.provenance),
            format!("verified coloring with {upper} colors"),
        ],
        witness: Some(c.clone()),
    })
}

/// Rainbow connection number of the complete multipartite graph with the
/// given part sizes (at least three parts).
pub fn rc_complete_multipartite(part_sizes: &[usize]) -> Result<u32, EngineError> {
    if part_sizes.len() < 3 {
        return Err(EngineError::InvalidParameter(format!(
            "need at least 3 parts, got {}",
            part_sizes.len()
        )));
    }
    if part_sizes.contains(&0) {
        return Err(EngineError::InvalidParameter("empty part".into()));
    }
    let mut sizes = part_sizes.to_vec();
    sizes.sort_unstable();
    let t = *sizes.last().expect("nonempty");
    let s: usize = sizes[..sizes.len() - 1].iter().sum();
    if t == 1 {
        return Ok(1);
    }
    if s > t {
        return Ok(2);
    }
    // min(3, ceil(t^(1/s))): smallest r with r^s >= t, capped at 3.
    let root = (1u32..=3)
        .find(|&r| pow_at_least(r as usize, s, t))
        .unwrap_or(3);
    Ok(root.min(3))
}

/// Whether `base^exp >= target`, without overflow.
fn pow_at_least(base: usize, exp: usize, target: usize) -> bool {
    let mut acc: usize = 1;
    for _ in 0..exp {
        match acc.checked_mul(base) {
            Some(next) => acc = next,
            None => return true,
        }
        if acc >= target {
            return true;
        }
    }
    acc >= target
}

/// SHA-256 fingerprint of the canonical edge list, tying coloring files to
/// the exact graph they color.
pub fn graph_fingerprint(g: &UndirectedGraph) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("rcg-graph-v1 {}\n", g.vertex_count()));
    for &(u, v) in g.edges() {
        hasher.update(format!("{u} {v}\n"));
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// On-disk coloring document.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ColoringFile {
    pub graph_fingerprint: String,
    pub colors: Vec<ColoredEdgeRecord>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ColoredEdgeRecord {
    pub u: usize,
    pub v: usize,
    pub color: u32,
}

impl ColoringFile {
    pub fn from_coloring(g: &UndirectedGraph, c: &EdgeColoring) -> Self {
        let colors = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ColoredEdgeRecord {
                u,
                v,
                color: c.color_of_index(i),
            })
            .collect();
        ColoringFile {
            graph_fingerprint: graph_fingerprint(g),
            colors,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("coloring file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, EngineError> {
        serde_json::from_str(text).map_err(|e| EngineError::FileParse(e.to_string()))
    }

    /// Validates the file against a graph, rejecting fingerprint mismatches.
    pub fn apply(&self, g: &UndirectedGraph) -> Result<EdgeColoring, EngineError> {
        let expected = graph_fingerprint(g);
        if self.graph_fingerprint != expected {
            return Err(EngineError::FingerprintMismatch {
                expected,
                found: self.graph_fingerprint.clone(),
            });
        }
        let triples: Vec<(usize, usize, u32)> =
            self.colors.iter().map(|r| (r.u, r.v, r.color)).collect();
        EdgeColoring::from_triples(g, &triples)
    }
}

/// Budget knobs for the exact search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Graphs with more edges get a bounds-only verdict.
    pub max_search_edges: usize,
    /// Backtrack-node budget across the whole deepening loop.
    pub max_nodes: u64,
    /// Worker threads for fanning out subtrees; 1 keeps the witness
    /// lexicographically minimal.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_search_edges: 20,
            max_nodes: 10_000_000,
            threads: 1,
        }
    }
}
