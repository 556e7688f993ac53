use crate::arthur_params::Violation;

/// Errors raised by constructors and decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("weight entries must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("highest weight {0:?} is not unitary")]
    NotUnitary(Vec<i64>),
    #[error("invalid infinitesimal character: {0}")]
    InfChar(String),
    #[error("invalid parameter: {}", codes(.0))]
    InvalidParameter(Vec<Violation>),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

fn codes(v: &[Violation]) -> String {
    v.iter().map(|x| x.code()).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
