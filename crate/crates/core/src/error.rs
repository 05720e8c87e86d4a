use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("base graph has {0} vertices; at most {max} are supported", max = crate::base::MAX_BASE_ORDER)]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 record: {0}")]
    Graph6(&'static str),
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("construction needs {required} word vertices, exceeding the cap of {cap}")]
    CapExceeded { required: u128, cap: u64 },
    #[error("invalid vertex label `{label}`: {reason}")]
    InvalidLabel { label: String, reason: &'static str },
    #[error("coloring is not proper: vertices {0} and {1} share a color")]
    NotProper(usize, usize),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("color {color} at vertex {vertex} is outside the palette of size {palette}")]
    ColorOutOfRange { vertex: usize, color: u32, palette: u32 },
    #[error("base graph is not bipartite")]
    NotBipartite,
    #[error("base graph has no edges")]
    Edgeless,
    #[error("search aborted")]
    Aborted,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
