use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("unsupported root system {family}{rank}: {reason}")]
    UnsupportedRank { family: String, rank: usize, reason: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero constant term in the denominator for gamma={gamma}, V={basis:?}, lambda={lambda:?}")]
    ZeroConstantDenominator { gamma: String, basis: Vec<String>, lambda: Vec<i64> },
    #[error("element is not invertible: {0}")]
    NonInvertible(String),
    #[error("polynomial division left a remainder: {0}")]
    NonDivisible(String),
    #[error("root system {0} is simply laced, no length split")]
    SimplyLaced(String),
    #[error("phi is not generic: <phi, mu> = 0 for basis {0:?}")]
    NonGenericPhi(Vec<String>),
    #[error("no generic phi found after {0} attempts")]
    GenericSearchExhausted(usize),
    #[error("weight is not integral or not in the required cone: {0}")]
    NonIntegralWeight(String),
    #[error("sign factor needs an integer exponent on root {0}")]
    SignOnNonInteger(String),
    #[error("contour radius too close to another singularity: {0}")]
    ContourTooClose(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
