use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("constant term {0} is not a unit of the coefficient ring")]
    NonUnitConstantTerm(String),
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("polynomial degree m must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("row index n must be non-negative, got {0}")]
    NegativeN(i64),
    #[error("generating function disagrees with direct coefficients: {0}")]
    Mismatch(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("argument outside the domain of convergence: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
