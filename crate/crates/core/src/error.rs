use thiserror::Error;

/// Errors raised by graph construction, parsing and the verification routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} out of range (1..=128)")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("isolated vertex {0}")]
    IsolatedVertex(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid link: {0}")]
    InvalidLink(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("invalid forbidden-subgraph spec: {0}")]
    ForbiddenSpec(String),
    #[error("invalid link assignment: {0}")]
    Assignment(String),
    #[error("input is not an unfoldment: {0}")]
    NotUnfoldment(String),
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("generator self-check failed: {0}")]
    SelfValidation(String),
    #[error("invalid chain: {0}")]
    Chain(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown task: {0}")]
    UnknownTask(String),
}

pub type Result<T> = std::result::Result<T, Error>;
