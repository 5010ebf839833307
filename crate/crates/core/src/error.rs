use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("invalid graph JSON: {0}")]
    Json(String),

    #[error("invalid rational {input:?}: {reason}")]
    Rational { input: String, reason: String },

    #[error("unknown pattern graph {0:?}")]
    UnknownPattern(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("search failed: {0}")]
    SearchFailed(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
