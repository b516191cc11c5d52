use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list, line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("pole file, line {line}: {msg}")]
    PoleFile { line: usize, msg: String },
    #[error("graph6 cannot encode a multigraph (loops or parallel edges); use the edge-list format")]
    NotSimple,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge set is not a perfect matching")]
    NotPerfect,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("vertex {0} is not a terminal of the pole")]
    NotATerminal(usize),
    #[error("vertex {0} is incident to a loop or a parallel edge")]
    MultiEdgeAt(usize),
    #[error("edge {0} is a loop")]
    LoopEdge(usize),
    #[error("invalid pole: {0}")]
    InvalidPole(String),
    #[error("wiring plan: {0}")]
    Wiring(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("generator gate failed: {0}")]
    Gate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("sampling cap of {0} attempts exhausted")]
    AttemptsExhausted(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
