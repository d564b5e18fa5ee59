use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph has {n} vertices; at most {max} are supported here")]
    TooLarge { n: usize, max: usize },

    #[error("graph has {n} vertices; at least {min} are required here")]
    TooSmall { n: usize, min: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("graph has no edges")]
    Edgeless,

    #[error("malformed graph6 string: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list, line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("transform precondition violated: {0}")]
    Precondition(#[from] PreconditionError),

    #[error("sample too small for a correlation: {0} graphs (need at least 3)")]
    SampleTooSmall(usize),

    #[error("correlation undefined: one of the indices is constant over the sample")]
    DegenerateSample,

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

/// Named reasons a transform refuses its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("vertex {0} is not pendant")]
    NotPendant(usize),

    #[error("no pendant path leads from vertex {end} to vertex {root}")]
    NotPendantPath { end: usize, root: usize },

    #[error("the two pendant paths are not vertex-disjoint")]
    PathsNotDisjoint,

    #[error("the remaining graph has {0} vertices; at least 2 are required")]
    BaseTooSmall(usize),

    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree {
        vertex: usize,
        degree: usize,
        expected: usize,
    },

    #[error("vertex {0} is not a neighbor of the attachment vertex outside its path")]
    NotBaseNeighbor(usize),

    #[error("both base neighbors have degree above 4 (degrees {0} and {1})")]
    DegreeCondition(usize, usize),
}
