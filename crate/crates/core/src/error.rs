use thiserror::Error;

/// Errors raised by hypergraph construction and spectral analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    InvalidUniformity(usize),

    #[error("edge #{edge} has {found} distinct vertices, expected {expected}")]
    NonUniformEdge {
        edge: usize,
        expected: usize,
        found: usize,
    },

    #[error("edge #{edge} duplicates an earlier edge")]
    DuplicateEdge { edge: usize },

    #[error("edge list is empty")]
    EmptyEdgeList,

    #[error("vertex token `{0}` appears twice in the vertex list")]
    DuplicateVertex(String),

    #[error("edge #{edge} references vertex index {vertex} out of range")]
    VertexOutOfRange { edge: usize, vertex: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },

    #[error("hypergraphs share vertex `{0}` but must be vertex-disjoint")]
    OverlappingVertices(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence {
        sweeps: usize,
        off_norm: f64,
        /// Diagonal of the partially rotated matrix when the sweep cap was hit.
        diagonal: Vec<f64>,
    },

    #[error("matrix order {order} exceeds the exact characteristic polynomial limit {limit}")]
    OrderLimitExceeded { order: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a subgraph: {0}")]
    NotASubgraph(String),

    #[error("vector is zero")]
    ZeroVector,

    #[error("partition is not balanced: {0}")]
    NotBalanced(String),

    #[error("eigenvalue sum / k = {0} is not close to an integer")]
    NotNearInteger(f64),

    #[error("hypergraph is disconnected")]
    Disconnected,

    #[error("largest two eigenvalues coincide ({0} ~ {1})")]
    DegenerateSpectrum(f64, f64),

    #[error("at least two edges are required")]
    TooFewEdges,

    #[error("bad power parameters: {0}")]
    BadParams(String),

    #[error("base eigenvalue {0} is not positive")]
    NonPositiveEigenvalue(f64),

    #[error("cannot choose {m} distinct {k}-subsets of {n} vertices")]
    TooManyEdges { k: usize, n: usize, m: usize },

    #[error("vertex token `{0}` cannot be written to the edge-list format")]
    UnserializableToken(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {error}")]
    AtLine { line: usize, error: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
