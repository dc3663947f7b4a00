//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("mixed cyclotomic orders: {0} vs {1}")]
    MixedCyclotomicOrder(u32, u32),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("mismatched variable counts: {0} vs {1}")]
    MixedVariableCount(usize, usize),
    #[error("no exact quotient: {0}")]
    NotDivisible(String),
    #[error("variable index {0} out of range for {1} variables")]
    IndexOutOfRange(usize, usize),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("mismatched group parameters: ({0},{1}) vs ({2},{3})")]
    MixedGroup(u32, usize, u32, usize),
    #[error("group of order {0} is outside the brute-force gate (n ≤ 4, r ≤ 3)")]
    GroupTooLarge(u128),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("tableau is not standard: {0}")]
    NonStandardTableau(String),
    #[error("tableau shapes do not match: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("linear dependence detected in a family expected independent: {0}")]
    DependenceDetected(String),
    #[error("span is not stable under the group action: {0}")]
    NotStable(String),
    #[error("expansion in the Specht basis failed: {0}")]
    ExpansionFailed(String),
    #[error("rank deficient at degree {0}: rank {1}, expected {2}")]
    RankDeficient(usize, usize, usize),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
