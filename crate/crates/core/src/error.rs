use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("multipartite graph needs at least one part")]
    NoParts,
    #[error("product factors must be nonempty")]
    EmptyFactor,
    #[error("unknown gallery entry {0:?}")]
    UnknownGalleryEntry(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {colors} entries but the graph has {vertices} vertices")]
    LengthMismatch { colors: usize, vertices: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("brute-force oracle is limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("k must be at least 1")]
    ZeroColors,
    #[error("search budget exhausted while deciding k = {k}")]
    BudgetExhausted { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("input is not a tree")]
    NotATree,
    #[error("input is not a connected unicyclic graph")]
    NotUnicyclic,
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error("palette violation: {0}")]
    Palette(String),
    #[error("input coloring is not a strong odd coloring of the {0} factor")]
    FactorNotStrongOdd(&'static str),
    #[error("complete factor sizes must both be at least 2 (got {0}, {1})")]
    FactorTooSmall(usize, usize),
    #[error("root {0} is out of range")]
    BadRoot(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("edge {edge} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { edge: usize, n: usize },
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("dart {0} is listed in the wrong rotation, twice, or not at all")]
    BadRotation(usize),
    #[error("rotation list refers to vertex {0} outside the map")]
    BadRotationVertex(usize),
    #[error("vertex {0} has degree below 2")]
    DegreeTooSmall(usize),
    #[error("vertex {0} is incident with a pair of parallel edges")]
    ParallelAtVertex(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("coloring is not proper on the underlying graph")]
    ImproperColoring,
    #[error("face of dart {0} is not a triangle")]
    NotTriangle(usize),
    #[error("map needs at least 3 vertices")]
    TooFewVertices,
    #[error("map is not connected")]
    Disconnected,
    #[error("map is not 2-connected")]
    NotBiconnected,
    #[error("cannot add an edge without destroying a required face")]
    NoExpendableFace,
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
