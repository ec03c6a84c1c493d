//! Independent oracles for the integration suites.
//!
//! Everything here deliberately avoids the library's verifier and solver:
//! rainbow connectivity is decided by exhaustive simple-path enumeration and
//! rc by brute force over all colorings, so the fast implementations are
//! checked against genuinely separate code paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rcg_core::UndirectedGraph;

/// All failing pairs under exhaustive simple-path enumeration: a pair fails
/// when no simple path between them has pairwise distinct edge colors.
/// `colors` is parallel to `g.edges()`.
pub fn failing_pairs_exhaustive(g: &UndirectedGraph, colors: &[u32]) -> Vec<(usize, usize)> {
    assert_eq!(colors.len(), g.edge_count());
    let n = g.vertex_count();
    let mut failing = Vec::new();
    for s in 0..n {
        for t in (s + 1)..n {
            let mut visited = vec![false; n];
            visited[s] = true;
            if !rainbow_path_exists(g, colors, s, t, &mut visited, 0) {
                failing.push((s, t));
            }
        }
    }
    failing
}

fn rainbow_path_exists(
    g: &UndirectedGraph,
    colors: &[u32],
    current: usize,
    target: usize,
    visited: &mut [bool],
    used_mask: u64,
) -> bool {
    if current == target {
        return true;
    }
    for next in g.neighbors(current) {
        if visited[next] {
            continue;
        }
        let edge = g.edge_index(current, next).expect("adjacent");
        let bit = 1u64 << (colors[edge] - 1);
        if used_mask & bit != 0 {
            continue;
        }
        visited[next] = true;
        if rainbow_path_exists(g, colors, next, target, visited, used_mask | bit) {
            visited[next] = false;
            return true;
        }
        visited[next] = false;
    }
    false
}

/// Brute-force rainbow connection number: the smallest k for which some
/// assignment of colors `1..=k` (first edge pinned to 1; color permutations
/// preserve rainbow-ness) passes the exhaustive check. Only for tiny graphs.
pub fn brute_force_rc(g: &UndirectedGraph) -> u32 {
    let m = g.edge_count();
    assert!((1..=10).contains(&m), "oracle is for tiny graphs");
    let mut colors = vec![1u32; m];
    for k in 1..=m as u32 {
        if try_colorings(g, &mut colors, 1, k) {
            return k;
        }
    }
    unreachable!("k = m always succeeds");
}

/// Whether some coloring with at most `k` colors makes the graph rainbow
/// connected, by exhaustive enumeration (first edge pinned to color 1).
pub fn rainbow_colorable_with(g: &UndirectedGraph, k: u32) -> bool {
    let mut colors = vec![1u32; g.edge_count()];
    try_colorings(g, &mut colors, 1, k)
}

fn try_colorings(g: &UndirectedGraph, colors: &mut Vec<u32>, idx: usize, k: u32) -> bool {
    if idx == colors.len() {
        return failing_pairs_exhaustive(g, colors).is_empty();
    }
    for c in 1..=k {
        colors[idx] = c;
        if try_colorings(g, colors, idx + 1, k) {
            return true;
        }
    }
    false
}

/// Every tree with `2..=max_vertices` vertices, one per isomorphism class.
/// Built by attaching a leaf to every vertex of every smaller tree and
/// deduplicating by canonical form; every tree with a leaf removed is a
/// smaller tree, so the enumeration is complete.
pub fn all_trees(max_vertices: usize) -> Vec<UndirectedGraph> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()]; // 1 vertex, no edges
    for n in 2..=max_vertices {
        let mut next: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
        for edges in &level {
            for attach in 0..(n - 1) {
                let mut grown = edges.clone();
                grown.push((attach, n - 1));
                next.entry(tree_canonical(n, &grown)).or_insert(grown);
            }
        }
        level = next.into_values().collect();
        for edges in &level {
            out.push(UndirectedGraph::with_unlabeled(n, edges.iter().copied()).unwrap());
        }
    }
    out
}

/// Canonical form of a tree: rooted encoding at its center (or the sorted
/// pair of encodings at the two-center edge).
fn tree_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // peel leaves to find the center(s)
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut frontier: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            removed[leaf] = true;
            remaining -= 1;
            for &u in &adj[leaf] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    match centers.as_slice() {
        [c] => encode_rooted(&adj, *c, usize::MAX),
        [c1, c2] => {
            let a = encode_rooted(&adj, *c1, *c2);
            let b = encode_rooted(&adj, *c2, *c1);
            if a <= b {
                format!("[{a}{b}]")
            } else {
                format!("[{b}{a}]")
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn encode_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| encode_rooted(adj, u, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Ascending partitions into at least `min_parts` parts, over all totals
/// `min_parts..=max_total`.
pub fn partitions_with_parts(max_total: usize, min_parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in min_parts..=max_total {
        let mut current = Vec::new();
        collect_partitions(total, 1, &mut current, min_parts, &mut out);
    }
    out
}

fn collect_partitions(
    remaining: usize,
    min_size: usize,
    current: &mut Vec<usize>,
    min_parts: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        if current.len() >= min_parts {
            out.push(current.clone());
        }
        return;
    }
    for size in min_size..=remaining {
        current.push(size);
        collect_partitions(remaining - size, size, current, min_parts, out);
        current.pop();
    }
}

/// Deterministic little xorshift generator so the random-graph suites need
/// no external crate plumbing here.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Random connected-or-not graph on `2..=max_n` vertices with a random
/// coloring using at most `max_colors` colors (compacted to a contiguous
/// range).
pub fn random_colored_graph(
    rng: &mut Rng,
    max_n: usize,
    max_colors: u32,
) -> (UndirectedGraph, Vec<u32>) {
    let n = 2 + rng.below(max_n - 1);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.below(100) < 55 {
                edges.push((u, v));
            }
        }
    }
    let g = UndirectedGraph::with_unlabeled(n, edges).unwrap();
    if g.edge_count() == 0 {
        // retry with a fresh draw; a graph with no edges has nothing to color
        return random_colored_graph(rng, max_n, max_colors);
    }
    let raw: Vec<u32> = (0..g.edge_count())
        .map(|_| 1 + rng.below(max_colors as usize) as u32)
        .collect();
    // compact to a contiguous 1..=k range, preserving the partition
    let distinct: BTreeSet<u32> = raw.iter().copied().collect();
    let remap: BTreeMap<u32, u32> = distinct
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i as u32 + 1))
        .collect();
    let colors = raw.into_iter().map(|c| remap[&c]).collect();
    (g, colors)
}
