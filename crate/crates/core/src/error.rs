use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("undefined value: {0}")]
    Undefined(String),

    #[error("refusing exhaustive search: {0}")]
    GuardRail(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn graph6(offset: usize, message: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            message: message.into(),
        }
    }
}
