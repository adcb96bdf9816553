use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("D = {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("D = {0} must be greater than 1")]
    DTooSmall(i64),
    #[error("operands belong to different fields (D = {0} vs D = {1})")]
    ContextMismatch(i64, i64),
    #[error("index {index} out of range ({range})")]
    IndexOutOfRange { index: i64, range: String },
    #[error("index {0} must be odd")]
    BadIndexParity(i64),
    #[error("r = {r} outside 0..={max}")]
    ROutOfRange { r: i64, max: i64 },
    #[error("element is not totally positive")]
    NotTotallyPositive,
    #[error("target is neither zero nor totally positive")]
    NotTotallyPositiveTarget,
    #[error("zero input")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("X = {x} outside 1..={max}")]
    XOutOfRange { x: i64, max: i64 },
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("cutoff {got} below the minimum {min}")]
    CutoffTooSmall { got: u64, min: u64 },
    #[error("ideal data does not cover norms below {0}")]
    MissingIdealData(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{check} failed: {detail}")]
    Verification { check: &'static str, detail: String },
}

impl Error {
    pub(crate) fn verification(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Verification {
            check,
            detail: detail.into(),
        }
    }

    /// True when the error reports a failed mathematical check rather than bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(self, Error::Verification { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
