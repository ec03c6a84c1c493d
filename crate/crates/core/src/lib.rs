//! Rainbow connection numbers of commuting graphs of finite groups.
//!
//! The crate builds finite groups from Cayley tables or named family
//! presentations, constructs their commuting graphs, enumerates maximal
//! abelian subgroup structure, and determines the rainbow connection number
//! of the commuting graph three ways: by a structural classifier, by explicit
//! verified colorings, and by an exact backtracking solver used to certify
//! the classifier on desk-scale instances.

pub mod classify;
pub mod commuting;
pub mod construct;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod rainbow;

pub use classify::{classify_rc, cross_check, CrossCheckReport};
pub use commuting::{commuting_graph, maximal_abelian_subgroups, MasCatalog};
pub use construct::{ConstructionReport, Scheme};
pub use error::{
    ClassifyError, ConstructError, EngineError, GraphError, GroupError, StructureError,
};
pub use graph::UndirectedGraph;
pub use group::{ElementSet, FiniteGroup};
pub use rainbow::{
    is_rainbow_connected, rc_exact, rc_lower_bound, EdgeColoring, RcVerdict, SearchConfig,
};
