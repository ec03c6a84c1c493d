//! Error types for every layer of the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a Latin square: {line}")]
    NotLatinSquare { line: String },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown family in spec '{0}'")]
    UnknownFamily(String),
    #[error("cayley file: {0}")]
    FileParse(String),
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than two vertices")]
    TrivialGraph,
    #[error("maximal clique count exceeds cap {cap}")]
    CliqueExplosion { cap: usize },
    #[error("invalid edge ({u},{v}) for {count} vertices")]
    InvalidEdge { u: usize, v: usize, count: usize },
    #[error("graph file: {0}")]
    FileParse(String),
}

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error(
        "maximal clique {names:?} is not an abelian subgroup; the clique correspondence failed"
    )]
    MasNotSubgroup { names: Vec<String> },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("coloring does not match the graph: {0}")]
    ColoringIncomplete(String),
    #[error("coloring uses color {color} outside 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("{constrained} colors appear on two or more edges; the verifier tracks at most {max}")]
    TooManyColors { constrained: usize, max: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has fewer than two vertices")]
    TrivialGraph,
    #[error("coloring is not rainbow connected ({failing} failing pairs)")]
    NotRainbowConnected { failing: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coloring file fingerprint {found} does not match graph fingerprint {expected}")]
    FingerprintMismatch { expected: String, found: String },
    #[error("coloring file: {0}")]
    FileParse(String),
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("center has fewer than two elements")]
    CenterTooSmall,
    #[error("group is abelian; its commuting graph is complete")]
    AbelianInput,
    #[error("center is not trivial")]
    CenterNotTrivial,
    #[error("group has {t} order-2 maximal abelian subgroups; this scheme needs at most 3")]
    TooManyPendants { t: usize },
    #[error("group has {t} order-2 maximal abelian subgroups; this scheme needs at least 4")]
    TooFewPendants { t: usize },
    #[error("no ordering of the non-pendant elements has the commuting-neighbor property")]
    OrderingNotFound,
    #[error("{m} maximal abelian subgroups exceed the 2^|Z| = {cap} distinct tuples")]
    TooManySubgroups { m: usize, cap: usize },
    #[error("subgroups {i} and {j} intersect in {found:?}, not the given core")]
    IntersectionMismatch {
        i: usize,
        j: usize,
        found: Vec<String>,
    },
    #[error("common core has {size} element(s); the tuple scheme needs at least 2")]
    HTooSmall { size: usize },
    #[error("collection needs at least two subgroups, got {m}")]
    CollectionTooSmall { m: usize },
    #[error("constructed coloring failed verification: {failing} pairs without a rainbow path")]
    VerificationFailed { failing: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("classifier and solver disagree: classifier {classifier:?} vs solver {solver:?}")]
    Mismatch {
        classifier: Box<crate::rainbow::RcVerdict>,
        solver: Box<crate::rainbow::RcVerdict>,
    },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}
