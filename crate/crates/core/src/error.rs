use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    Zero,

    #[error("{d} does not divide {n}")]
    NotADivisor { n: u64, d: u64 },

    #[error("graph on {requested} vertices exceeds the size cap of {cap}")]
    TooLarge { requested: u64, cap: u64 },

    #[error("brute-force oracle supports at most {cap} vertices, got {requested}")]
    OracleTooLarge { requested: usize, cap: usize },

    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },

    #[error("unknown graph format `{0}`")]
    UnknownFormat(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid injection instance: {0}")]
    InvalidInstance(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("injection instance of size {requested} exceeds the enumeration cap of {cap}")]
    InstanceTooLarge { requested: usize, cap: usize },
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::TooLarge { .. }
                | Error::OracleTooLarge { .. }
                | Error::BudgetExceeded { .. }
                | Error::InstanceTooLarge { .. }
        )
    }
}
