//! Commuting graphs and maximal abelian subgroup structure.
//!
//! A maximal abelian subgroup is exactly a maximal clique of the commuting
//! graph, and a maximal set of pairwise commuting elements is automatically a
//! subgroup. The catalog is computed from the clique side and re-validated
//! algebraically; an independent centralizer-splitting enumeration
//! cross-checks it without touching the clique code.

use fixedbitset::FixedBitSet;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::StructureError;
use crate::graph::UndirectedGraph;
use crate::group::{ElementSet, FiniteGroup};

/// Commuting graph on `x` (default: the whole group). Vertex `i` is the
/// `i`-th member of `x` in sorted element order; labels carry element names.
pub fn commuting_graph(
    group: &FiniteGroup,
    x: Option<&ElementSet>,
) -> Result<UndirectedGraph, StructureError> {
    let all;
    let x = match x {
        Some(x) => x,
        None => {
            all = group.all_elements();
            &all
        }
    };
    if x.is_empty() {
        return Err(StructureError::EmptySubset);
    }
    let members = x.members();
    let labels = members.iter().map(|&a| group.name(a).to_string()).collect();
    let mut edges = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if group.op(a, b) == group.op(b, a) {
                edges.push((i, j));
            }
        }
    }
    Ok(UndirectedGraph::new(labels, edges)?)
}

/// The collection of all maximal abelian subgroups of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasCatalog {
    /// Canonically sorted: each subgroup sorted internally, list sorted
    /// lexicographically.
    pub subgroups: Vec<ElementSet>,
    /// Number of order-2 members (each is the identity plus one isolated
    /// involution, and forms a pendant edge of the commuting graph).
    pub order2_count: usize,
}

impl MasCatalog {
    fn from_sets(mut subgroups: Vec<ElementSet>) -> Self {
        subgroups.sort();
        let order2_count = subgroups.iter().filter(|s| s.len() == 2).count();
        MasCatalog {
            subgroups,
            order2_count,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Lowest catalog index containing the element.
    pub fn first_containing(&self, a: usize) -> Option<usize> {
        self.subgroups.iter().position(|s| s.contains(a))
    }

    /// All collections of catalog members whose pairwise intersections equal
    /// a common core, grouped by that core. Every returned collection is
    /// maximal (no further member keeps the property) and has at least two
    /// members; when several maximal collections share a core, all are kept.
    pub fn common_intersections(&self) -> BTreeMap<ElementSet, Vec<Vec<usize>>> {
        let m = self.subgroups.len();
        let mut cores = BTreeSet::new();
        for i in 0..m {
            for j in (i + 1)..m {
                cores.insert(self.subgroups[i].intersection(&self.subgroups[j]));
            }
        }
        let mut out = BTreeMap::new();
        for core in cores {
            let edges = (0..m).flat_map(|i| {
                let core = &core;
                let subgroups = &self.subgroups;
                ((i + 1)..m)
                    .filter(move |&j| subgroups[i].intersection(&subgroups[j]) == *core)
                    .map(move |j| (i, j))
            });
            let aux =
                UndirectedGraph::with_unlabeled(m, edges).expect("catalog indices are in range");
            let collections: Vec<Vec<usize>> = aux
                .maximal_cliques()
                .expect("catalog-sized graph stays under the clique cap")
                .into_iter()
                .filter(|c| c.len() >= 2)
                .collect();
            if !collections.is_empty() {
                out.insert(core, collections);
            }
        }
        out
    }
}

/// Maximal abelian subgroups via maximal cliques of the commuting graph.
///
/// Every clique is validated as an abelian subgroup; a failure would mean
/// the clique correspondence broke and is reported as a hard error.
pub fn maximal_abelian_subgroups(group: &FiniteGroup) -> Result<MasCatalog, StructureError> {
    let graph = commuting_graph(group, None)?;
    let cliques = graph.maximal_cliques()?;
    let mut subgroups = Vec::with_capacity(cliques.len());
    for clique in cliques {
        let set = ElementSet::new(group, clique)?;
        if !set.is_abelian_subgroup(group) {
            return Err(StructureError::MasNotSubgroup {
                names: group.set_names(&set),
            });
        }
        subgroups.push(set);
    }
    Ok(MasCatalog::from_sets(subgroups))
}

/// Independent enumeration of maximal abelian subgroups, for cross-checking
/// the clique route.
///
/// Recursively splits a candidate superset on its first noncommuting pair
/// `(x, y)`: every maximal commuting set inside the candidate either contains
/// `x` (so lies in the candidate intersected with the centralizer of `x`) or
/// omits `x`. Pairwise-commuting leaves are collected and non-maximal leaves
/// discarded.
pub fn mas_by_centralizer_oracle(group: &FiniteGroup) -> MasCatalog {
    let n = group.order();
    let mut centralizer_bits = Vec::with_capacity(n);
    for a in 0..n {
        let mut bits = FixedBitSet::with_capacity(n);
        for b in 0..n {
            if group.op(a, b) == group.op(b, a) {
                bits.insert(b);
            }
        }
        centralizer_bits.push(bits);
    }

    fn first_noncommuting_pair(
        candidate: &FixedBitSet,
        centralizers: &[FixedBitSet],
    ) -> Option<(usize, usize)> {
        for a in candidate.ones() {
            if !candidate.is_subset(&centralizers[a]) {
                let b = candidate
                    .difference(&centralizers[a])
                    .next()
                    .expect("nonempty difference");
                return Some((a, b));
            }
        }
        None
    }

    fn split(
        candidate: FixedBitSet,
        centralizers: &[FixedBitSet],
        leaves: &mut BTreeSet<Vec<usize>>,
    ) {
        match first_noncommuting_pair(&candidate, centralizers) {
            None => {
                leaves.insert(candidate.ones().collect());
            }
            Some((x, y)) => {
                debug_assert!(!centralizers[x].contains(y));
                let mut with_x = candidate.clone();
                with_x.intersect_with(&centralizers[x]);
                split(with_x, centralizers, leaves);
                let mut without_x = candidate;
                without_x.remove(x);
                split(without_x, centralizers, leaves);
            }
        }
    }

    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut leaves = BTreeSet::new();
    split(all, &centralizer_bits, &mut leaves);

    // Drop leaves strictly contained in another leaf.
    let leaves: Vec<Vec<usize>> = leaves.into_iter().collect();
    let maximal: Vec<ElementSet> = leaves
        .iter()
        .filter(|a| {
            !leaves
                .iter()
                .any(|b| b.len() > a.len() && a.iter().all(|v| b.binary_search(v).is_ok()))
        })
        .map(|a| ElementSet::new(group, a.iter().copied()).expect("indices in range"))
        .collect();
    MasCatalog::from_sets(maximal)
}

/// Involutions whose centralizer is exactly the identity and themselves.
/// Each one spans an order-2 maximal abelian subgroup and a pendant edge of
/// the commuting graph.
pub fn isolated_involutions(group: &FiniteGroup) -> ElementSet {
    let members = group
        .involutions()
        .iter()
        .filter(|&x| {
            let cent = group.centralizer(x).expect("valid index");
            cent.len() == 2
        })
        .collect::<Vec<_>>();
    ElementSet::new(group, members).expect("indices in range")
}
