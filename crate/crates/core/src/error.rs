use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate interpolation node: x = {0} appears twice")]
    DegenerateNode(String),
    #[error("interpolation needs at least one point")]
    EmptyInterpolation,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{what} = {value} exceeds the enumeration cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("enumeration of {size} tuples exceeds the budget {budget}")]
    BudgetExceeded { size: String, budget: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("prime modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("exponent {0} outside [2, p]: general Frobenius powers out of scope")]
    FrobeniusOutOfScope(u64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cache: {0}")]
    Cache(String),
}
