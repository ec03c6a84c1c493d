//! Finite groups as validated Cayley tables.
//!
//! Elements are dense indices `0..order`; the table stores the product of
//! every ordered pair. Construction checks the group axioms exhaustively,
//! so everything downstream can assume it is working with an actual group.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

use crate::error::GroupError;

/// Hard cap on group order. The Cayley table is quadratic in memory and the
/// associativity check is cubic, so desk-scale orders are the intended range.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// A finite group on elements `0..order` with a full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Flattened row-major table: `table[a * order + b]` is the product `a * b`.
    table: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and locates the identity.
    ///
    /// `names` defaults to `g0, g1, ...` when absent. Fails with the first
    /// violating cell or triple when the table is not a group.
    pub fn from_cayley(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidParameter(
                "Cayley table must be nonempty".into(),
            ));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(GroupError::OrderTooLarge {
                order: n,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidParameter(format!(
                    "row {i} has length {} in a table of order {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::InvalidParameter(format!(
                        "entry ({i},{j}) = {v} out of range 0..{n}"
                    )));
                }
                flat.push(v);
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(GroupError::InvalidParameter(format!(
                        "{} names for {n} elements",
                        names.len()
                    )));
                }
                names
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let group = FiniteGroup {
            order: n,
            table: flat,
            identity: 0,
            names,
        };
        group.validated()
    }

    /// Used by the family constructors, which build tables from relations and
    /// still run the full axiom check as a guard against generator bugs.
    pub(crate) fn from_flat_table(
        order: usize,
        table: Vec<usize>,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), order * order);
        if order > DEFAULT_ORDER_CAP {
            return Err(GroupError::OrderTooLarge {
                order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let group = FiniteGroup {
            order,
            table,
            identity: 0,
            names,
        };
        group.validated()
    }

    fn validated(mut self) -> Result<Self, GroupError> {
        let n = self.order;
        // Latin square: each row and column is a permutation of 0..n.
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let v = self.op(i, j);
                if seen[v] == i {
                    return Err(GroupError::NotLatinSquare {
                        line: format!("row {i} repeats {v} at column {j}"),
                    });
                }
                seen[v] = i;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                let v = self.op(i, j);
                if seen[v] == j {
                    return Err(GroupError::NotLatinSquare {
                        line: format!("column {j} repeats {v} at row {i}"),
                    });
                }
                seen[v] = j;
            }
        }
        // Two-sided identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| self.op(e, i) == i && self.op(i, e) == i))
            .ok_or(GroupError::NoIdentity)?;
        self.identity = identity;
        // Exhaustive associativity.
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // Two-sided inverses. Implied by the axioms above, but checked so the
        // error set matches the construction contract.
        for a in 0..n {
            let has = (0..n).any(|b| self.op(a, b) == identity && self.op(b, a) == identity);
            if !has {
                return Err(GroupError::NoInverse { element: a });
            }
        }
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// Element index by display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The product `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    fn check_index(&self, a: usize) -> Result<(), GroupError> {
        if a >= self.order {
            Err(GroupError::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.op(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Whether `a * b = b * a`.
    pub fn commute(&self, a: usize, b: usize) -> Result<bool, GroupError> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.op(a, b) == self.op(b, a))
    }

    /// Elements commuting with every element of the group.
    pub fn center(&self) -> ElementSet {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|a| self.op(z, a) == self.op(a, z)))
            .collect();
        ElementSet { members }
    }

    /// Elements commuting with `a`.
    pub fn centralizer(&self, a: usize) -> Result<ElementSet, GroupError> {
        self.check_index(a)?;
        let members = (0..self.order)
            .filter(|&x| self.op(a, x) == self.op(x, a))
            .collect();
        Ok(ElementSet { members })
    }

    /// Elements of order exactly 2.
    pub fn involutions(&self) -> ElementSet {
        let members = (0..self.order)
            .filter(|&a| a != self.identity && self.op(a, a) == self.identity)
            .collect();
        ElementSet { members }
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    /// The whole group as an element set.
    pub fn all_elements(&self) -> ElementSet {
        ElementSet {
            members: (0..self.order).collect(),
        }
    }

    /// Renders member names of a set, in index order.
    pub fn set_names(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|a| self.names[a].clone()).collect()
    }

    /// Serializes to the Cayley table file format.
    pub fn to_cayley_json(&self) -> String {
        let file = CayleyFile {
            order: self.order,
            names: self.names.clone(),
            table: (0..self.order)
                .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("cayley file serializes")
    }

    /// Parses and validates the Cayley table file format.
    pub fn from_cayley_json(text: &str) -> Result<Self, GroupError> {
        let file: CayleyFile =
            serde_json::from_str(text).map_err(|e| GroupError::FileParse(e.to_string()))?;
        if file.order != file.table.len() {
            return Err(GroupError::FileParse(format!(
                "order field is {} but table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        FiniteGroup::from_cayley(file.table, Some(file.names))
    }

    pub fn load_cayley(path: &Path) -> Result<Self, GroupError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| GroupError::FileParse(e.to_string()))?;
        Self::from_cayley_json(&text)
    }

    pub fn save_cayley(&self, path: &Path) -> Result<(), GroupError> {
        std::fs::write(path, self.to_cayley_json())
            .map_err(|e| GroupError::FileParse(e.to_string()))
    }
}

/// On-disk Cayley table document.
#[derive(Serialize, Deserialize)]
struct CayleyFile {
    order: usize,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
}

/// A subset of group elements in canonical sorted order, so sets compare by
/// value. Holds centers, centralizers and maximal abelian subgroups.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    members: Vec<usize>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl ElementSet {
    /// Builds a set, sorting, deduplicating and bounds-checking the members.
    pub fn new(
        group: &FiniteGroup,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GroupError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= group.order()) {
            return Err(GroupError::IndexOutOfRange {
                index: bad,
                order: group.order(),
            });
        }
        Ok(ElementSet { members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Position of an element within the sorted member list.
    pub fn position(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&a| other.contains(a))
            .collect();
        ElementSet { members }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut members = self.members.clone();
        members.extend(other.iter());
        members.sort_unstable();
        members.dedup();
        ElementSet { members }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    /// Checks that the set is a subgroup in which every pair commutes.
    pub fn is_abelian_subgroup(&self, group: &FiniteGroup) -> bool {
        if !self.contains(group.identity()) {
            return false;
        }
        for a in self.iter() {
            if !self.contains(group.inverse(a)) {
                return false;
            }
            for b in self.iter() {
                if !self.contains(group.op(a, b)) || group.op(a, b) != group.op(b, a) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_cayley(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert!(g.is_abelian());
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.involutions().members(), &[1]);
    }

    #[test]
    fn rejects_non_latin_square() {
        let err = FiniteGroup::from_cayley(vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { .. }), "{err}");
    }

    #[test]
    fn rejects_non_associative_loop() {
        // An order-5 loop: Latin square with identity 0, but (1*1)*2 != 1*(1*2).
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = FiniteGroup::from_cayley(table, None).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "{err}");
    }

    #[test]
    fn rejects_table_without_identity() {
        // Latin square where no element acts as a two-sided identity.
        let table = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        let err = FiniteGroup::from_cayley(table, None).unwrap_err();
        assert!(matches!(err, GroupError::NoIdentity), "{err}");
    }

    #[test]
    fn commute_basics() {
        let d6 = families::dihedral(3).unwrap();
        let r = d6.element_by_name("r").unwrap();
        let s = d6.element_by_name("s").unwrap();
        assert!(!d6.commute(r, s).unwrap());
        for x in 0..d6.order() {
            assert!(d6.commute(d6.identity(), x).unwrap());
            assert!(d6.commute(x, x).unwrap());
        }
        assert!(d6.commute(0, 99).is_err());
    }

    #[test]
    fn center_equals_centralizer_intersection() {
        for g in [
            families::dihedral(4).unwrap(),
            families::generalized_quaternion(3).unwrap(),
            families::semidihedral(2).unwrap(),
            families::alternating(4).unwrap(),
        ] {
            let mut acc = g.all_elements();
            for a in 0..g.order() {
                acc = acc.intersection(&g.centralizer(a).unwrap());
            }
            assert_eq!(acc, g.center());
        }
    }

    #[test]
    fn centralizer_of_identity_is_group() {
        let g = families::dihedral(5).unwrap();
        assert_eq!(g.centralizer(g.identity()).unwrap(), g.all_elements());
    }

    #[test]
    fn involutions_of_small_groups() {
        let z3 = families::cyclic(3).unwrap();
        assert!(z3.involutions().is_empty());
        let d6 = families::dihedral(3).unwrap();
        let names = d6.set_names(&d6.involutions());
        assert_eq!(names, vec!["s", "rs", "r^2s"]);
    }

    #[test]
    fn cayley_file_round_trip() {
        let g = families::semidihedral(2).unwrap();
        let text = g.to_cayley_json();
        let back = FiniteGroup::from_cayley_json(&text).unwrap();
        assert_eq!(back, g);
        assert!(text.contains("\"order\""));
        assert!(text.contains("\"names\""));
        assert!(text.contains("\"table\""));
    }

    #[test]
    fn element_set_canonical() {
        let g = families::cyclic(6).unwrap();
        let a = ElementSet::new(&g, [3, 1, 3, 5]).unwrap();
        let b = ElementSet::new(&g, [5, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert!(ElementSet::new(&g, [7]).is_err());
    }
}
