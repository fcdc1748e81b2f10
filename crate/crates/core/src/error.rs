use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0}, {1}}} appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{u}, {v}}} references a vertex outside 0..{vertex_count}")]
    VertexOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("painted index {index} is out of range for {edge_count} edges")]
    PaintedOutOfRange { index: usize, edge_count: usize },
    #[error("painted edge {0} listed more than once")]
    DuplicatePainted(usize),
    #[error("painted pair {{{0}, {1}}} is not an edge of the graph")]
    PaintedNotAnEdge(usize, usize),

    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not planar")]
    Nonplanar,
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("dual is not a simple graph: {0}")]
    DualNotSimple(String),
    #[error("connectivity order must be 1, 2 or 3, got {0}")]
    InvalidConnectivity(usize),

    #[error("permutations of degree {expected} and {found} cannot be combined")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeded the element cap of {0}")]
    CapExceeded(usize),
    #[error("unknown group id {0:?}")]
    UnknownGroupId(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("input is not a valid crushtacean: {}", .0.join(", "))]
    NotCrushtacean(Vec<String>),
    #[error("graph is not the cycle expansion of the supplied seed")]
    ProvenanceMismatch,
    #[error("family parameter out of range: {0}")]
    BadParameter(String),
    #[error("no built-in seed graph realizes {0}")]
    CatalogMiss(String),
    #[error("generated graph failed a structural check: {0}")]
    ConstructionCheck(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
