use thiserror::Error;

/// Errors raised by the model, engine, saturation and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BergeError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("pattern uniformity {pattern} exceeds host uniformity {host}")]
    UniformityMismatch { pattern: usize, host: usize },

    #[error("pattern has no edges")]
    EmptyPattern,

    #[error("hyperedge {0} is already present in the host")]
    AlreadyPresent(String),

    #[error("hyperedge {edge} does not have {r} distinct in-range vertices")]
    BadHyperedge { edge: String, r: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("search budget exceeded after {explored} nodes (lower bound {lower}, upper bound {upper})")]
    BudgetExceeded {
        explored: u64,
        lower: usize,
        upper: usize,
    },

    #[error("value overflows the supported integer range: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, BergeError>;
