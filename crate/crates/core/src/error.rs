use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DpError {
    #[error("weight map has no entry for label {0}")]
    MissingLabel(String),

    #[error("path oracle budget exceeded: {needed} labels needed, cap is {cap}")]
    BudgetExceeded { needed: usize, cap: usize },

    #[error("natural-number overflow")]
    Overflow,

    #[error("invalid DAG: {0}")]
    InvalidDag(String),

    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),

    #[error("constraint algebra `{0}` has no identity element")]
    MissingIdentity(String),

    #[error("constraint algebra `{0}` is not group-like")]
    NotGroupLike(String),

    #[error("constraint value {value} is outside the carrier of `{algebra}`")]
    OutOfCarrier { algebra: String, value: i64 },

    #[error("invalid time series: {0}")]
    InvalidSeries(String),
}

pub type Result<T, E = DpError> = std::result::Result<T, E>;
