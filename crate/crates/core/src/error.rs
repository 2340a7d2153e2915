use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("edge {label} is a loop at vertex {vertex}")]
    Loop { label: String, vertex: Vertex },

    #[error("edges {first} and {second} both join {a} and {b}")]
    DuplicatePair {
        first: String,
        second: String,
        a: Vertex,
        b: Vertex,
    },

    #[error("label {0} is used by more than one edge")]
    DuplicateLabel(String),

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("unknown edge label {0}")]
    UnknownLabel(String),

    #[error("{0} is not a chord of the spanning tree")]
    UnknownChord(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),

    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),

    #[error("element is not in F_(t,n): exponent sums {0}")]
    NotInKernel(String),

    #[error("group closure exceeded {limit} elements")]
    OrderGuard { limit: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),
}
