use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial: the kernel would be everything")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("empty factor list")]
    EmptyFactorList,
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator index {index} out of range 1..={n} at position {pos}")]
    IndexOutOfRange { index: usize, n: usize, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

impl Error {
    /// Parse-level failures (bad input text) as opposed to domain failures.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::IndexOutOfRange { .. } | Error::NegativeExponent { .. }
        )
    }

    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
