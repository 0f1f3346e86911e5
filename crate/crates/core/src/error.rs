use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("target strand count {target} too small, need at least {needed}")]
    TargetTooSmall { target: usize, needed: usize },

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("handle reduction exceeded its step budget of {0}")]
    BudgetExceeded(u64),

    #[error("subgroup `{id}` does not support {what}")]
    Unsupported {
        id: &'static str,
        what: &'static str,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
