use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no value bound for parameter `{0}`")]
    MissingParameter(String),
    #[error("denominator vanishes under the binding")]
    DenominatorVanishes,
    #[error("binding violates constraint `{0} != 0`")]
    ConstraintViolated(String),
    #[error("enumeration of {0} items exceeds the guard of {1}")]
    GuardExceeded(u128, u128),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid strand count {n}: {reason}")]
    InvalidStrandCount { n: usize, reason: String },
    #[error("word uses generators outside the alphabet: {0}")]
    AlphabetMismatch(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("branch solver stuck: {0}")]
    SolverStuck(String),
    #[error("matrix is not an involution")]
    NotInvolution,
}

pub type Result<T> = std::result::Result<T, Error>;
