use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid family spec `{spec}`: {reason}")]
    Family { spec: String, reason: String },

    #[error(
        "built-in enumeration supports 1 <= n <= {max}, got {n}; \
         supply a graph6 file for larger orders"
    )]
    EnumerationRange { n: usize, max: usize },

    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("maximum degree {0} is below 2; the bound is undefined")]
    DegreeTooSmall(usize),

    #[error("minimum degree {min} must lie in 1..={max}")]
    MinDegreeOutOfRange { min: usize, max: usize },

    #[error("forcing parameter k must be at least 1")]
    ZeroK,
}
