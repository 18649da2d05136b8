use thiserror::Error;

/// Errors produced by the character-theory engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("element is not contained in the group")]
    NotInGroup,

    #[error("not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("budget exceeded: {what} is {size}, limit {limit}")]
    BudgetExceeded { what: &'static str, size: u64, limit: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("value is not integral at p = {0}")]
    NotPIntegral(u64),

    #[error("eigenspace splitting failed: {0}")]
    SplittingFailure(String),

    #[error("table verification failed: {0}")]
    Verification(String),

    #[error("schema error at {field}: {message}")]
    Schema { field: String, message: String },

    #[error("operation needs a full character table, got a degree list")]
    PartialTable,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
