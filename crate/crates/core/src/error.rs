use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    /// A degenerate cell list whose expansion ends in an isolated vertex.
    #[error("normalized sequence ends with an isolated vertex (graph would be disconnected)")]
    DisconnectedResult,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges (maximum degree is zero)")]
    NoEdges,
    #[error("vertex count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("state has no neighbours under this perturbation scheme")]
    NoNeighbors,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },
    #[error("self-loop on vertex {0}")]
    SelfLoopVertex(usize),
    #[error("edge list is empty")]
    EmptyInput,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
