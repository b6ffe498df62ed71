use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("coloring has {got} entries but graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph has {n} vertices, exceeding the exhaustive-search budget of {limit}")]
    BudgetExceeded { n: usize, limit: usize },
    #[error("graph has no odd cycle (bipartite); 2-color it directly")]
    NoOddCycle,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("coloring hypothesis violated: {count} distinct cycle lengths \u{2261} {residue} (mod {modulus}) witnessed")]
    HypothesisViolation {
        modulus: usize,
        residue: usize,
        count: usize,
        /// Witness cycles, each a closed vertex sequence (first vertex not repeated).
        witnesses: Vec<Vec<usize>>,
    },
    #[error("online algorithm broke its contract: {0}")]
    ContractViolation(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
