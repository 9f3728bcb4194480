use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("vertex {0} is covered by more than one matching edge")]
    OverlappingMatching(usize),
    #[error("matching was built for {found} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex set is not independent ({0} is an edge inside it)")]
    NotIndependent(Edge),
    #[error("independent set of size {found} is not maximum (maximum is {expected})")]
    NotMaximumIndependent { expected: usize, found: usize },
    #[error("ordering is not a permutation of the independent set")]
    NotPermutation,
    #[error("matching of size {found} is not maximum (maximum is {expected})")]
    NotMaximumMatching { expected: usize, found: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error(
        "oracle guard exceeded: graph has {n} vertices and {m} edges, \
         limits are {max_vertices} vertices and {max_edges} edges"
    )]
    OracleLimit {
        n: usize,
        m: usize,
        max_vertices: usize,
        max_edges: usize,
    },
    #[error("internal cross-check disagreement: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
