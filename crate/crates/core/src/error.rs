use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("{what} refused: size {size} exceeds bound {bound}")]
    SearchRefused { what: &'static str, size: usize, bound: usize },

    #[error("vertex {vertex} is not free: it lies in facets {first:?} and {second:?}")]
    NotFree { vertex: usize, first: Vec<usize>, second: Vec<usize> },

    #[error("clique complex has dimension {dim}; only dimension <= 2 is supported here")]
    DimensionTooLarge { dim: usize },

    #[error("facet {0:?} is not a triangle")]
    NotTriangle(Vec<usize>),

    #[error("ring has {ring} vertex slots but the graph has {graph} vertices")]
    RingMismatch { ring: usize, graph: usize },

    #[error("invalid specification: {0}")]
    Spec(String),

    #[error("size guard: {what} has dimension {dim}, above the guard {guard}")]
    SizeGuard { what: String, dim: usize, guard: usize },

    #[error("corpus has no graph named `{0}`")]
    UnknownCorpusGraph(String),

    #[error("cannot read `{path}`: {source}")]
    ReadFile { path: String, source: std::io::Error },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
