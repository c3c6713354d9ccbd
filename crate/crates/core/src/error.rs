use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: {0} and {1} are in different components")]
    Disconnected(usize, usize),
    #[error("empty source set")]
    EmptySources,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("graph is not prime: nontrivial module {0:?}")]
    NotPrime(Vec<usize>),
    #[error("no vertex left outside the excluded set")]
    Exhausted,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("input too large for exhaustive search: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
