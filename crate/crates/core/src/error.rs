use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}: edge ({0}, {0})")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex {root}")]
    Disconnected { root: usize, unreached: usize },

    #[error("graph contains an even cycle: {0:?}")]
    HasEvenCycle(Vec<usize>),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("component {index} does not match its kind: {detail}")]
    ComponentMismatch { index: usize, detail: String },

    #[error("malformed piece: {0}")]
    MalformedPiece(String),

    #[error("partial assignment covers {got} vertices, graph has {expected}")]
    AssignmentLength { expected: usize, got: usize },

    #[error("m = {m} exceeds 2n = {}; use thm2", 2 * .n)]
    TooDense { n: usize, m: usize },

    #[error("instance too large for oracle: n = {n} exceeds cap {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid generator parameters: {0}")]
    Generator(String),
}
