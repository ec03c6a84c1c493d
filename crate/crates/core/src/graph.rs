//! Undirected simple graphs with the metrics and clique machinery the
//! rainbow engine needs. Adjacency is stored as one bitset per vertex; the
//! clique enumeration and the solver pruning are intersection heavy.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Cap on enumerated maximal cliques before giving up.
pub const DEFAULT_CLIQUE_CAP: usize = 100_000;

/// `(u, v, color)` records from a graph file's coloring field.
pub type ColorTriples = Vec<(usize, usize, u32)>;

/// An immutable undirected simple graph with labeled vertices and a
/// canonically sorted edge list (`u < v`, lexicographic).
#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    labels: Vec<String>,
    adj: Vec<FixedBitSet>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges.len())
            .finish()
    }
}

impl UndirectedGraph {
    /// Builds a graph from labels and an edge list. Loops are rejected,
    /// duplicate edges collapse.
    pub fn new(
        labels: Vec<String>,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edge_list {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, count: n });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut edges = Vec::new();
        for (u, nbrs) in adj.iter().enumerate() {
            for v in nbrs.ones() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        Ok(UndirectedGraph { labels, adj, edges })
    }

    pub fn with_unlabeled(
        n: usize,
        edge_list: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::new((0..n).map(|i| i.to_string()).collect(), edge_list)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Canonical sorted edge list, `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Index of edge `(u,v)` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Number of degree-1 vertices.
    pub fn pendant_count(&self) -> usize {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 1)
            .count()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n >= 1 && self.edges.len() == n * (n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut queue = VecDeque::from([0usize]);
        seen.insert(0);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == n
    }

    fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Largest distance between any two vertices, by BFS from every vertex.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.vertex_count() < 2 {
            return Err(GraphError::TrivialGraph);
        }
        let mut best = 0;
        for s in 0..self.vertex_count() {
            let dist = self.bfs_distances(s);
            for &d in &dist {
                if d == usize::MAX {
                    return Err(GraphError::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    /// All inclusion-maximal cliques via Bron-Kerbosch with pivoting, in
    /// canonical sorted order. Isolated vertices come out as singletons.
    pub fn maximal_cliques(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        self.maximal_cliques_capped(DEFAULT_CLIQUE_CAP)
    }

    pub fn maximal_cliques_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        let n = self.vertex_count();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut r: Vec<usize> = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        self.bron_kerbosch(&mut r, p, x, cap, &mut out)?;
        for clique in &mut out {
            clique.sort_unstable();
        }
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: FixedBitSet,
        mut x: FixedBitSet,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), GraphError> {
        if p.is_clear() && x.is_clear() {
            if out.len() >= cap {
                return Err(GraphError::CliqueExplosion { cap });
            }
            out.push(r.clone());
            return Ok(());
        }
        // Pivot on the candidate with the most candidate neighbors.
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| {
                let mut tmp = self.adj[u].clone();
                tmp.intersect_with(&p);
                tmp.count_ones(..)
            })
            .expect("p or x nonempty");
        let mut candidates = p.clone();
        candidates.difference_with(&self.adj[pivot]);
        let mut p = p;
        for v in candidates.ones().collect::<Vec<_>>() {
            let mut next_p = p.clone();
            next_p.intersect_with(&self.adj[v]);
            let mut next_x = x.clone();
            next_x.intersect_with(&self.adj[v]);
            r.push(v);
            self.bron_kerbosch(r, next_p, next_x, cap, out)?;
            r.pop();
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }

    /// DOT rendering; when a coloring is supplied edges carry their color
    /// index as a label and a palette color for rendering.
    pub fn to_dot(&self, coloring: Option<&crate::rainbow::EdgeColoring>) -> String {
        const PALETTE: [&str; 12] = [
            "red",
            "blue",
            "forestgreen",
            "orange",
            "purple",
            "brown",
            "cyan3",
            "magenta",
            "gold3",
            "gray40",
            "darkolivegreen",
            "deeppink3",
        ];
        let mut out = String::from("graph cg {\n  node [shape=circle];\n");
        for (v, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("  v{v} [label=\"{}\"];\n", escape_dot(label)));
        }
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            match coloring {
                Some(c) => {
                    let color = c.color_of_index(idx);
                    let dot_color = PALETTE[(color as usize - 1) % PALETTE.len()];
                    out.push_str(&format!(
                        "  v{u} -- v{v} [label=\"{color}\", color=\"{dot_color}\"];\n"
                    ));
                }
                None => out.push_str(&format!("  v{u} -- v{v};\n")),
            }
        }
        out.push_str("}\n");
        out
    }

    /// Graph file serialization: labels, canonical edges, optional coloring.
    pub fn to_json(&self, coloring: Option<&crate::rainbow::EdgeColoring>) -> String {
        let file = GraphFile {
            labels: self.labels.clone(),
            edges: self.edges.clone(),
            coloring: coloring.map(|c| {
                self.edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| ColoredEdge {
                        u,
                        v,
                        color: c.color_of_index(i),
                    })
                    .collect()
            }),
        };
        serde_json::to_string_pretty(&file).expect("graph file serializes")
    }

    /// Parses the graph file format; returns the graph and, when present,
    /// the raw colored-edge triples (validated against the graph by
    /// `EdgeColoring::from_triples`).
    pub fn from_json(text: &str) -> Result<(Self, Option<ColorTriples>), GraphError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::FileParse(e.to_string()))?;
        let graph = UndirectedGraph::new(file.labels, file.edges)?;
        let triples = file
            .coloring
            .map(|list| list.into_iter().map(|ce| (ce.u, ce.v, ce.color)).collect());
        Ok((graph, triples))
    }

    // Standard constructions used by the solver calibration suite.

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Self::with_unlabeled(n, edges).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        Self::with_unlabeled(n, (1..n).map(|v| (v - 1, v))).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Self::with_unlabeled(n, edges).expect("valid")
    }

    /// Star with `leaves` pendant vertices around vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::with_unlabeled(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid")
    }

    /// Complete multipartite graph; part sizes need not be sorted.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Self {
        let n: usize = part_sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let edges = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part_of[u] != part_of[v]);
        Self::with_unlabeled(n, edges).expect("valid")
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<ColoredEdge>>,
}

#[derive(Serialize, Deserialize)]
struct ColoredEdge {
    u: usize,
    v: usize,
    color: u32,
}
