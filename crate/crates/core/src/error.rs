use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameters outside the range an operation supports.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// A cell tuple that violates disjointness, coverage or anchoring.
    #[error("malformed cell: {0}")]
    MalformedCell(String),

    /// Text that does not follow the block-list cell syntax.
    #[error("cannot parse cell block `{block}`: {reason}")]
    Parse { block: String, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// An operation invoked on an input outside its documented domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The reconstructed vector field failed one of its consistency checks.
    #[error("reconstruction mismatch: {0}")]
    ReconstructionMismatch(String),

    /// A closed gradient path was found; the ids form the cycle.
    #[error("vector field is not gradient; closed path through {} cells", .0.len())]
    NotGradient(Vec<u64>),

    #[error("no factorization: {0}")]
    NoFactorization(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    /// A computation that would exceed an explicit resource cap.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}
