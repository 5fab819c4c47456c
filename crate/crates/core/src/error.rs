use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph on {n} vertices is outside the supported range (max {max})")]
    UnsupportedSize { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("edge ({u}, {v}) is not present in the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("graph on {n} vertices exceeds the exhaustive search cap of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
