use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}: argument must be non-zero")]
    ZeroArgument(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cell ({row},{col}) is {reason}")]
    BadCell {
        row: usize,
        col: usize,
        reason: &'static str,
    },

    #[error("no character degree data for {0}")]
    MissingData(String),

    #[error("group data file: {0}")]
    DataFile(String),

    #[error("unknown group label {0:?}")]
    UnknownGroup(String),

    #[error("search for {group} reached the n cap {cap} before the bound sieve closed")]
    CapReached { group: String, cap: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
