use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node {node} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("cdll index {0} is not live")]
    DeadCdllIndex(usize),

    #[error("insert without anchor into a non-empty cdll")]
    MissingAnchor,

    #[error("invalid instruction {found:?} at index {index}")]
    InvalidInstruction { index: usize, found: char },

    #[error("node {node} is not reachable from start node {start}")]
    Unreachable { start: usize, node: usize },

    #[error("no valid starting node: no node reaches every other node")]
    NoValidStart,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search budget of {budget} nodes exhausted after exploring {explored}")]
    BudgetExhausted {
        budget: u64,
        explored: u64,
        best_so_far: Option<String>,
    },

    #[error("search deadline passed after exploring {explored} nodes")]
    DeadlineExceeded {
        explored: u64,
        best_so_far: Option<String>,
    },

    #[error("graph with {size} nodes exceeds the oracle cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("correlation undefined: {0}")]
    UndefinedStatistic(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}
