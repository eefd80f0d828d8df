use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a non-empty index")]
    EmptyIndex,

    #[error("invalid index text {0:?}: parts must be positive integers separated by commas")]
    ParseIndex(String),

    #[error("invalid word text {0:?}: letters must be 'x' or 'y'")]
    ParseWord(String),

    #[error("index {index} is all ones; the relation is defined on indices with some part >= 2")]
    AllOnes { index: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid Bowman-Bradley data: {0}")]
    InvalidBBSpec(String),

    #[error("monomial {word:?} is outside {space}")]
    Domain { word: String, space: &'static str },

    #[error("{p} is not an odd prime (divisible by {witness})")]
    NotPrime { p: u64, witness: u64 },

    #[error("coefficient {coeff} of {term} has a denominator divisible by {p}")]
    PDividesDenominator { p: u64, term: String, coeff: String },

    #[error("brute-force oracle cost guard exceeded: {0}")]
    CostGuard(String),

    #[error("unknown theorem id {id:?}; valid ids: {valid}")]
    UnknownTheorem { id: String, valid: String },

    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
