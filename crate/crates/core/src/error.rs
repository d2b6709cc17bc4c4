use thiserror::Error;

/// Failures reported by the library.
///
/// Certification failures are errors on purpose: a construction that does not
/// satisfy the identities it is supposed to satisfy signals either a bug or a
/// falsified statement, and callers must not silently continue.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    BadModulus(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("weight is not compatible with the p-character: {0}")]
    NotInLambdaChi(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("p = {p} divides a denominator ({coefficient})")]
    DenominatorDivisible { p: u64, coefficient: String },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("enumeration refused: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
