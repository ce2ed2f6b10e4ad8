use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}: loops are implicit and must not be listed")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("product would have {vertices} vertices, limit is {limit}")]
    ProductTooLarge { vertices: usize, limit: usize },
    #[error("malformed generator spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("state budget exceeded: {needed} entries requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("engine supports at most {limit} vertices, graph has {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("robber placed on occupied vertex {0}")]
    RobberOnCop(usize),
    #[error("illegal robber move from {from} to {to}")]
    IllegalMove { from: usize, to: usize },
    #[error("strategy table has no entry for config {config:?}, robber {robber}, {steps_left} steps left")]
    MissingState { config: Vec<usize>, robber: usize, steps_left: usize },
    #[error("strategy table was built for a different graph (hash {expected}, got {actual})")]
    GraphMismatch { expected: String, actual: String },
    #[error("no eternally winning configuration with {k} cops at t = {t}")]
    EmptyWinSet { k: usize, t: usize },
    #[error("not a tree")]
    NotATree,
    #[error("invalid decomposition: part {part}: {reason}")]
    InvalidDecomposition { part: usize, reason: String },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),
    #[error("unsupported strategy table version {0}")]
    TableVersion(u32),
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
