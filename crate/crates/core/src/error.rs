use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "cannot parse Lie type {0:?}: expected a series letter A-G followed by a rank, e.g. \"B2\""
    )]
    ParseType(String),

    #[error("type {series}{rank} is not a simple Lie algebra ({reason})")]
    InadmissibleType {
        series: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, root system has rank {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("{what}: estimated size {estimate} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        estimate: String,
        limit: u64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn guard(what: &'static str, estimate: impl ToString, limit: u64) -> Self {
        Error::GuardExceeded {
            what,
            estimate: estimate.to_string(),
            limit,
        }
    }
}
