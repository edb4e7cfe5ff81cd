use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} is outside the supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("adjacency row {vertex} is not symmetric, loop-free and in range")]
    InvalidAdjacency { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("graph6 byte {byte:#04x} at position {position} is outside 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("graph6 order {order} is not supported (1..=32)")]
    UnsupportedOrder { order: usize },
    #[error("graph6 record too short: {expected} data bytes expected, {found} found")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 record has {extra} trailing byte(s) after the adjacency data")]
    TrailingData { extra: usize },
    #[error("graph6 padding bits in the last byte are not zero")]
    NonZeroPadding,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("named graph `{input}`: {reason}")]
    NamedGraph { input: String, reason: String },
    #[error("{operation} supports order at most {cap}, got {order}")]
    OrderAboveCap { operation: &'static str, order: usize, cap: usize },
    #[error("not a partition of the vertex set: {0}")]
    InvalidPartition(String),
    #[error("coalition sides must be nonempty and disjoint")]
    InvalidCoalitionSides,
    #[error("graph is not a singleton-partition graph: vertex {blocking_vertex} has no coalition partner")]
    NotSingletonPartition { blocking_vertex: usize },
    #[error("minimum degree {min_degree} is outside the characterized range (at most 2)")]
    OutOfCharacterizedRange { min_degree: usize },
    #[error("no chain template matches: {0}")]
    Unclassified(String),
    #[error("family spec `{input}`: {reason}")]
    FamilySpec { input: String, reason: String },
    #[error("could not satisfy the {family} constraints after {retries} resamples")]
    GenerationFailed { family: String, retries: usize },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("n_max = {n_max} is below the smallest order ({min}) in the hypothesis class of {theorem}")]
    OrderTooSmall { theorem: String, n_max: usize, min: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
