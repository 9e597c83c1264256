use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must lie in 2..={max}", max = crate::MAX_RANK)]
    InvalidRank(usize),

    #[error("{what} {value} out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("rows {0:?} are not a strictly decreasing list of positive integers")]
    NotStrict(Vec<u32>),

    #[error("diagram {diagram} has a row longer than {max} (rank {rank})")]
    DiagramTooWide {
        diagram: String,
        max: usize,
        rank: usize,
    },

    #[error("shape mismatch: expected length {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, value: impl Into<i64>, min: i64, max: i64) -> Self {
        Error::OutOfRange {
            what,
            value: value.into(),
            min,
            max,
        }
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
