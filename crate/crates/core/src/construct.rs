//! Explicit edge colorings of commuting graphs, one per classification rule.
//!
//! Every constructor builds the coloring its rule prescribes, runs the
//! rainbow verifier, and only returns a report when verification succeeds.
//! A verification failure is surfaced as an error, never ignored: it would
//! falsify the rule the coloring realizes.

use serde::Serialize;

use crate::commuting::{commuting_graph, maximal_abelian_subgroups, MasCatalog};
use crate::error::ConstructError;
use crate::graph::UndirectedGraph;
use crate::group::{ElementSet, FiniteGroup};
use crate::rainbow::{is_rainbow_connected, ColoringFile, EdgeColoring};

/// The coloring schemes, tagged for the CLI `--theorem` flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    /// `3a`: route every pair through two central vertices (3 colors).
    CenterPair,
    /// `3b`: trivial center, at most three pendant subgroups (3 colors).
    TrivialCenterFew,
    /// `4`: distinct center-edge tuples per subgroup (2 colors).
    CenterTuple,
    /// `5`: tuple or spine coloring over a common-core collection (2 or 3).
    CommonCore,
    /// `7`: trivial center, t >= 4 pendant subgroups (t colors).
    PendantSpread,
}

impl Scheme {
    pub fn tag(&self) -> &'static str {
        match self {
            Scheme::CenterPair => "3a",
            Scheme::TrivialCenterFew => "3b",
            Scheme::CenterTuple => "4",
            Scheme::CommonCore => "5",
            Scheme::PendantSpread => "7",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "3a" => Some(Scheme::CenterPair),
            "3b" => Some(Scheme::TrivialCenterFew),
            "4" => Some(Scheme::CenterTuple),
            "5" => Some(Scheme::CommonCore),
            "7" => Some(Scheme::PendantSpread),
            _ => None,
        }
    }
}

/// A verified coloring together with the graph it colors and the element
/// orderings the scheme chose.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub scheme: Scheme,
    /// The commuting graph the coloring applies to (the full group, or the
    /// union of a collection for the common-core scheme).
    pub graph: UndirectedGraph,
    pub coloring: EdgeColoring,
    /// True on every successfully returned report.
    pub verified: bool,
    pub ordering_notes: Vec<String>,
}

#[derive(Serialize)]
struct ConstructionFile {
    theorem: String,
    ordering_notes: Vec<String>,
    #[serde(flatten)]
    coloring: ColoringFile,
}

impl ConstructionReport {
    /// Coloring-file serialization plus the scheme tag and ordering notes.
    pub fn to_json(&self) -> String {
        let file = ConstructionFile {
            theorem: self.scheme.tag().to_string(),
            ordering_notes: self.ordering_notes.clone(),
            coloring: ColoringFile::from_coloring(&self.graph, &self.coloring),
        };
        serde_json::to_string_pretty(&file).expect("construction serializes")
    }
}

fn finish(
    scheme: Scheme,
    graph: UndirectedGraph,
    colors: Vec<u32>,
    ordering_notes: Vec<String>,
) -> Result<ConstructionReport, ConstructError> {
    let coloring = EdgeColoring::new(&graph, colors)?;
    let check = is_rainbow_connected(&graph, &coloring)?;
    if !check.connected {
        return Err(ConstructError::VerificationFailed {
            failing: check.failing_pairs.len(),
        });
    }
    Ok(ConstructionReport {
        scheme,
        graph,
        coloring,
        verified: true,
        ordering_notes,
    })
}

/// Whether `m <= 2^h` without shift overflow.
pub fn fits_in_pow2(m: usize, h: usize) -> bool {
    h as u32 >= usize::BITS - 1 || m <= (1usize << h)
}

/// Scheme 3a: pick two central elements `z1`, `z2`; color `x z1` with 1 and
/// `x z2` with 2 for every non-central `x`, color `z1 z2` with 3, everything
/// else with 1. Every non-adjacent pair is joined by `x z1 z2 y`.
pub fn color_nontrivial_center(group: &FiniteGroup) -> Result<ConstructionReport, ConstructError> {
    if group.is_abelian() {
        return Err(ConstructError::AbelianInput);
    }
    let center = group.center();
    if center.len() < 2 {
        return Err(ConstructError::CenterTooSmall);
    }
    let graph = commuting_graph(group, None)?;
    let z1 = center.members()[0];
    let z2 = center.members()[1];
    let mut colors = vec![1u32; graph.edge_count()];
    for x in 0..group.order() {
        if center.contains(x) {
            continue;
        }
        colors[graph
            .edge_index(x, z1)
            .expect("central vertex is universal")] = 1;
        colors[graph
            .edge_index(x, z2)
            .expect("central vertex is universal")] = 2;
    }
    colors[graph.edge_index(z1, z2).expect("central pair adjacent")] = 3;
    let notes = vec![format!(
        "central pair: {}, {}",
        group.name(z1),
        group.name(z2)
    )];
    finish(Scheme::CenterPair, graph, colors, notes)
}

/// The hub ordering and pendant list shared by schemes 3b and 7.
///
/// Pendant edges `e c_i` get color `i`; hub edges to the remaining elements
/// alternate colors 1 and 2 along an ordering in which every element
/// commutes with a sequence neighbor; all other edges get color 3.
fn trivial_center_coloring(
    group: &FiniteGroup,
    catalog: &MasCatalog,
) -> Result<(UndirectedGraph, Vec<u32>, Vec<String>), ConstructError> {
    let e = group.identity();
    let graph = commuting_graph(group, None)?;

    let pendants: Vec<usize> = catalog
        .subgroups
        .iter()
        .filter(|s| s.len() == 2)
        .map(|s| s.iter().find(|&x| x != e).expect("order-2 subgroup"))
        .collect();
    // filter preserves sorted catalog order; make element order explicit
    let mut pendants = pendants;
    pendants.sort_unstable();
    let t = pendants.len();

    // Assign each non-pendant, non-identity element to its lowest-index
    // subgroup of order >= 3; a block's elements pairwise commute.
    let hubs: Vec<&ElementSet> = catalog.subgroups.iter().filter(|s| s.len() > 2).collect();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); hubs.len()];
    for x in 0..group.order() {
        if x == e || pendants.contains(&x) {
            continue;
        }
        let owner = hubs
            .iter()
            .position(|s| s.contains(x))
            .expect("subgroups cover the group");
        blocks[owner].push(x);
    }
    blocks.retain(|b| !b.is_empty());

    let commutes = |a: usize, b: usize| group.op(a, b) == group.op(b, a);
    let sequence_ok = |seq: &[usize]| {
        (0..seq.len()).all(|i| {
            (i > 0 && commutes(seq[i], seq[i - 1]))
                || (i + 1 < seq.len() && commutes(seq[i], seq[i + 1]))
        })
    };

    // Concatenated block order usually works outright (every block of size
    // >= 2 gives its members an in-block neighbor); otherwise permute the
    // block order bounded-exhaustively.
    let concat = |order: &[usize]| -> Vec<usize> {
        order
            .iter()
            .flat_map(|&b| blocks[b].iter().copied())
            .collect()
    };
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    let mut sequence = concat(&order);
    let mut tried = 1usize;
    if !sequence_ok(&sequence) {
        const MAX_TRIES: usize = 5040;
        let mut found = false;
        // Heap's algorithm over block order.
        let mut c = vec![0usize; order.len()];
        let mut i = 0;
        while i < order.len() && tried < MAX_TRIES {
            if c[i] < i {
                if i % 2 == 0 {
                    order.swap(0, i);
                } else {
                    order.swap(c[i], i);
                }
                tried += 1;
                sequence = concat(&order);
                if sequence_ok(&sequence) {
                    found = true;
                    break;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        if !found {
            return Err(ConstructError::OrderingNotFound);
        }
    }

    let mut colors = vec![3u32; graph.edge_count()];
    for (i, &p) in pendants.iter().enumerate() {
        colors[graph.edge_index(e, p).expect("pendant edge")] = i as u32 + 1;
    }
    for (j, &x) in sequence.iter().enumerate() {
        // 1-based position: odd gets color 1, even gets color 2
        colors[graph.edge_index(e, x).expect("identity is universal")] =
            if j % 2 == 0 { 1 } else { 2 };
    }
    let notes = vec![
        format!(
            "pendants ({t}): {}",
            pendants
                .iter()
                .map(|&p| group.name(p))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!(
            "hub order ({}): {}",
            sequence.len(),
            sequence
                .iter()
                .map(|&x| group.name(x))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!("block orders tried: {tried}"),
    ];
    Ok((graph, colors, notes))
}

/// Scheme 3b: trivial center and at most three order-2 maximal abelian
/// subgroups; three colors.
pub fn color_trivial_center_small_t(
    group: &FiniteGroup,
) -> Result<ConstructionReport, ConstructError> {
    if group.is_abelian() {
        return Err(ConstructError::AbelianInput);
    }
    if group.center().len() != 1 {
        return Err(ConstructError::CenterNotTrivial);
    }
    let catalog = maximal_abelian_subgroups(group)?;
    let t = catalog.order2_count;
    if t > 3 {
        return Err(ConstructError::TooManyPendants { t });
    }
    let (graph, colors, notes) = trivial_center_coloring(group, &catalog)?;
    finish(Scheme::TrivialCenterFew, graph, colors, notes)
}

/// Scheme 7: trivial center and `t >= 4` order-2 maximal abelian subgroups;
/// exactly `t` colors, one per pendant edge.
pub fn color_trivial_center_t(group: &FiniteGroup) -> Result<ConstructionReport, ConstructError> {
    if group.is_abelian() {
        return Err(ConstructError::AbelianInput);
    }
    if group.center().len() != 1 {
        return Err(ConstructError::CenterNotTrivial);
    }
    let catalog = maximal_abelian_subgroups(group)?;
    let t = catalog.order2_count;
    if t < 4 {
        return Err(ConstructError::TooFewPendants { t });
    }
    let (graph, colors, notes) = trivial_center_coloring(group, &catalog)?;
    let report = finish(Scheme::PendantSpread, graph, colors, notes)?;
    debug_assert_eq!(report.coloring.k(), t as u32);
    Ok(report)
}

/// Lexicographic `i`-th tuple over `{1,2}^len` (index 0 is all ones). The
/// last coordinate varies fastest; coordinates beyond the bit width of the
/// index are always 1.
fn tuple_colors(i: usize, len: usize) -> Vec<u32> {
    (0..len)
        .map(|j| {
            let shift = len - 1 - j;
            let bit = if shift >= usize::BITS as usize {
                0
            } else {
                (i >> shift) & 1
            };
            1 + bit as u32
        })
        .collect()
}

/// Scheme 4: when the group has at most `2^|Z|` maximal abelian subgroups,
/// assign each subgroup a distinct tuple over the center and color the
/// center edges of each non-central vertex by its subgroup's tuple. Two
/// colors; every non-adjacent pair is joined through a center element where
/// their tuples differ.
pub fn color_tuple_two(group: &FiniteGroup) -> Result<ConstructionReport, ConstructError> {
    if group.is_abelian() {
        return Err(ConstructError::AbelianInput);
    }
    let center = group.center();
    if center.len() < 2 {
        return Err(ConstructError::CenterTooSmall);
    }
    let catalog = maximal_abelian_subgroups(group)?;
    let m = catalog.len();
    if !fits_in_pow2(m, center.len()) {
        return Err(ConstructError::TooManySubgroups {
            m,
            cap: 1usize << center.len().min(usize::BITS as usize - 1),
        });
    }
    let graph = commuting_graph(group, None)?;
    let mut colors = vec![1u32; graph.edge_count()];
    let tuples: Vec<Vec<u32>> = (0..m).map(|i| tuple_colors(i, center.len())).collect();
    for x in 0..group.order() {
        if center.contains(x) {
            continue;
        }
        let owner = catalog
            .first_containing(x)
            .expect("subgroups cover the group");
        for (j, z) in center.iter().enumerate() {
            colors[graph.edge_index(x, z).expect("central vertex is universal")] = tuples[owner][j];
        }
    }
    let mut notes = vec![format!(
        "center order: {}",
        center
            .iter()
            .map(|z| group.name(z))
            .collect::<Vec<_>>()
            .join(", ")
    )];
    for (i, tuple) in tuples.iter().enumerate() {
        notes.push(format!(
            "subgroup {i} {:?} tuple {:?}",
            group.set_names(&catalog.subgroups[i]),
            tuple
        ));
    }
    let report = finish(Scheme::CenterTuple, graph, colors, notes)?;
    debug_assert_eq!(report.coloring.k(), 2);
    Ok(report)
}

/// Scheme 5: color the commuting graph of the union of a collection whose
/// pairwise intersections all equal a common core `H` with `|H| >= 2`.
///
/// With `m <= 2^|H|` members, distinct core-edge tuples give a rainbow
/// 2-coloring. With more members no 2-coloring can separate them, and a
/// 3-coloring does: a spine of color 1 along consecutive core elements and
/// the first `|H|` member classes, color 2 from the first core element to
/// the remaining classes, color 3 elsewhere across the core, and color 1
/// within members.
pub fn color_pstar(
    group: &FiniteGroup,
    core: &ElementSet,
    collection: &[ElementSet],
) -> Result<ConstructionReport, ConstructError> {
    let m = collection.len();
    if m < 2 {
        return Err(ConstructError::CollectionTooSmall { m });
    }
    if core.len() < 2 {
        return Err(ConstructError::HTooSmall { size: core.len() });
    }
    for (i, a) in collection.iter().enumerate() {
        for (j, b) in collection.iter().enumerate().skip(i + 1) {
            let found = a.intersection(b);
            if found != *core {
                return Err(ConstructError::IntersectionMismatch {
                    i,
                    j,
                    found: group.set_names(&found),
                });
            }
        }
        if a.len() <= core.len() {
            return Err(ConstructError::IntersectionMismatch {
                i,
                j: i,
                found: group.set_names(a),
            });
        }
    }
    let mut union = core.clone();
    for member in collection {
        union = union.union(member);
    }
    let graph = commuting_graph(group, Some(&union))?;
    let vertex_of = |element: usize| union.position(element).expect("element in union");

    // 1-based member index of each non-core element; unique because the
    // pairwise intersections all equal the core.
    let mut member_of = vec![0usize; group.order()];
    for (i, theta) in collection.iter().enumerate() {
        for w in theta.iter() {
            if !core.contains(w) {
                member_of[w] = i + 1;
            }
        }
    }
    // 1-based core position of each core element, in sorted order.
    let core_pos = |element: usize| core.position(element).expect("core element") + 1;

    let h = core.len();
    let two_colorable = fits_in_pow2(m, h);
    let mut colors;
    let mut notes = vec![
        format!(
            "core order: {}",
            core.iter()
                .map(|z| group.name(z))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!("collection size {m}, core size {h}"),
    ];
    if two_colorable {
        colors = vec![1u32; graph.edge_count()];
        let tuples: Vec<Vec<u32>> = (0..m).map(|i| tuple_colors(i, h)).collect();
        for w in union.iter() {
            if core.contains(w) {
                continue;
            }
            let owner = member_of[w] - 1;
            for (j, z) in core.iter().enumerate() {
                colors[graph
                    .edge_index(vertex_of(w), vertex_of(z))
                    .expect("core vertex is universal in the union")] = tuples[owner][j];
            }
        }
        notes.push("two-color tuple case".into());
    } else {
        colors = Vec::with_capacity(graph.edge_count());
        for &(p, q) in graph.edges() {
            let a = union.members()[p];
            let b = union.members()[q];
            let color = match (core.contains(a), core.contains(b)) {
                (true, true) => {
                    let (i, j) = (core_pos(a).min(core_pos(b)), core_pos(a).max(core_pos(b)));
                    if j == i + 1 {
                        1
                    } else {
                        3
                    }
                }
                (true, false) | (false, true) => {
                    let (z, w) = if core.contains(a) { (a, b) } else { (b, a) };
                    let j = core_pos(z);
                    let i = member_of[w];
                    if i <= h && j == i {
                        1
                    } else if j == 1 && i > h {
                        2
                    } else {
                        3
                    }
                }
                // within one member, outside the core
                (false, false) => 1,
            };
            colors.push(color);
        }
        notes.push("three-color spine case".into());
    }
    let report = finish(Scheme::CommonCore, graph, colors, notes)?;
    debug_assert_eq!(report.coloring.k(), if two_colorable { 2 } else { 3 });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn center_pair_on_sd24_and_q16() {
        for group in [
            families::semidihedral(3).unwrap(),
            families::generalized_quaternion(4).unwrap(),
        ] {
            let report = color_nontrivial_center(&group).unwrap();
            assert!(report.verified);
            assert_eq!(report.coloring.k(), 3);
        }
    }

    #[test]
    fn center_pair_rejects_trivial_center_and_abelian() {
        let d6 = families::dihedral(3).unwrap();
        assert!(matches!(
            color_nontrivial_center(&d6),
            Err(ConstructError::CenterTooSmall)
        ));
        let z4 = families::cyclic(4).unwrap();
        assert!(matches!(
            color_nontrivial_center(&z4),
            Err(ConstructError::AbelianInput)
        ));
    }

    #[test]
    fn small_t_on_d6_and_a4() {
        let d6 = families::dihedral(3).unwrap();
        let report = color_trivial_center_small_t(&d6).unwrap();
        assert!(report.verified);
        assert_eq!(report.coloring.k(), 3);

        // t = 0: only the parity rule colors the hub edges
        let a4 = families::alternating(4).unwrap();
        let report = color_trivial_center_small_t(&a4).unwrap();
        assert!(report.verified);
        assert_eq!(report.coloring.k(), 3);
    }

    #[test]
    fn small_t_rejects_nontrivial_center() {
        let q16 = families::generalized_quaternion(4).unwrap();
        assert!(matches!(
            color_trivial_center_small_t(&q16),
            Err(ConstructError::CenterNotTrivial)
        ));
    }

    #[test]
    fn small_t_rejects_many_pendants() {
        let d10 = families::dihedral(5).unwrap();
        assert!(matches!(
            color_trivial_center_small_t(&d10),
            Err(ConstructError::TooManyPendants { t: 5 })
        ));
    }

    #[test]
    fn tuple_two_on_sd24_and_q8() {
        let sd24 = families::semidihedral(3).unwrap();
        let report = color_tuple_two(&sd24).unwrap();
        assert_eq!(report.coloring.k(), 2);

        let q8 = families::generalized_quaternion(2).unwrap();
        let report = color_tuple_two(&q8).unwrap();
        assert_eq!(report.coloring.k(), 2);
    }

    #[test]
    fn tuple_two_rejects_q16() {
        // 5 subgroups exceed 2^|Z| = 4
        let q16 = families::generalized_quaternion(4).unwrap();
        assert!(matches!(
            color_tuple_two(&q16),
            Err(ConstructError::TooManySubgroups { m: 5, cap: 4 })
        ));
    }

    #[test]
    fn tuple_two_handles_centers_wider_than_the_index_width() {
        // |Z| = 64 for C_32 x Q_8; tuple coordinates beyond bit 63 stay 1
        let big = families::from_spec("product:cyclic:32,quaternion:2").unwrap();
        assert_eq!(big.order(), 256);
        assert_eq!(big.center().len(), 64);
        let report = color_tuple_two(&big).unwrap();
        assert!(report.verified);
        assert_eq!(report.coloring.k(), 2);
    }

    #[test]
    fn tuples_are_distinct() {
        let len = 4;
        let tuples: Vec<Vec<u32>> = (0..16).map(|i| tuple_colors(i, len)).collect();
        for (i, a) in tuples.iter().enumerate() {
            assert!(a.iter().all(|&c| c == 1 || c == 2));
            for b in tuples.iter().skip(i + 1) {
                assert_ne!(a, b);
            }
        }
        assert_eq!(tuples[0], vec![1, 1, 1, 1]);
        assert_eq!(tuples[1], vec![1, 1, 1, 2]);
    }

    #[test]
    fn pstar_on_q16_covers_whole_graph() {
        let q16 = families::generalized_quaternion(4).unwrap();
        let catalog = maximal_abelian_subgroups(&q16).unwrap();
        let report = color_pstar(&q16, &q16.center(), &catalog.subgroups).unwrap();
        assert_eq!(report.coloring.k(), 3);
        assert_eq!(report.graph.vertex_count(), 16);
    }

    #[test]
    fn pstar_two_color_case_on_sd24() {
        let sd24 = families::semidihedral(3).unwrap();
        let catalog = maximal_abelian_subgroups(&sd24).unwrap();
        let report = color_pstar(&sd24, &sd24.center(), &catalog.subgroups).unwrap();
        assert_eq!(report.coloring.k(), 2);
    }

    #[test]
    fn pstar_rejects_bad_inputs() {
        let q16 = families::generalized_quaternion(4).unwrap();
        let catalog = maximal_abelian_subgroups(&q16).unwrap();
        let tiny = ElementSet::new(&q16, [q16.identity()]).unwrap();
        assert!(matches!(
            color_pstar(&q16, &tiny, &catalog.subgroups),
            Err(ConstructError::HTooSmall { size: 1 })
        ));
        // claim a wrong core: {e, a^2} is not the pairwise intersection
        let wrong = ElementSet::new(&q16, [0, 2]).unwrap();
        assert!(matches!(
            color_pstar(&q16, &wrong, &catalog.subgroups),
            Err(ConstructError::IntersectionMismatch { .. })
        ));
        assert!(matches!(
            color_pstar(&q16, &q16.center(), &catalog.subgroups[..1]),
            Err(ConstructError::CollectionTooSmall { m: 1 })
        ));
    }

    #[test]
    fn pendant_spread_on_odd_dihedrals() {
        for (n, t) in [(5usize, 5u32), (7, 7)] {
            let group = families::dihedral(n).unwrap();
            let report = color_trivial_center_t(&group).unwrap();
            assert!(report.verified);
            assert_eq!(report.coloring.k(), t);
        }
        let d6 = families::dihedral(3).unwrap();
        assert!(matches!(
            color_trivial_center_t(&d6),
            Err(ConstructError::TooFewPendants { t: 3 })
        ));
    }

    #[test]
    fn construction_json_has_contract_fields() {
        let d10 = families::dihedral(5).unwrap();
        let report = color_trivial_center_t(&d10).unwrap();
        let text = report.to_json();
        assert!(text.contains("\"theorem\": \"7\""));
        assert!(text.contains("\"ordering_notes\""));
        assert!(text.contains("\"graph_fingerprint\""));
        assert!(text.contains("\"colors\""));
    }
}
