use thiserror::Error;

/// Errors raised by group construction, analysis, search and catalog loading.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds cap {cap}")]
    OrderExceedsCap { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("action row for acting element {0} is not an automorphism")]
    NotAnAutomorphism(usize),
    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("{p} is not a prime divisor of the group order {order}")]
    NotPrimeDivisor { p: usize, order: usize },
    #[error("{m} does not divide the group order {order}")]
    NotADivisor { m: usize, order: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set is not a subgroup")]
    NotASubgroup,
    #[error("group has odd order {0}")]
    OddOrder(usize),
    #[error("shape {shape} does not multiply to the group order {order}")]
    ShapeMismatch { shape: String, order: usize },
    #[error("group order {0} is not divisible by 4")]
    NotDivisibleBy4(usize),
    #[error("brute-force oracle refuses order {order} with {k} factors")]
    TooLarge { order: usize, k: usize },
    #[error("group is not supersolvable")]
    NotSupersolvable,
    #[error("group-ring coefficient overflow")]
    CoefficientOverflow,
    #[error("group-ring identity does not hold")]
    IdentityFails,
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("record `{id}`: built order {built}, expected {expected}")]
    OrderMismatch { id: String, built: usize, expected: usize },
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("unknown claim `{0}`")]
    UnknownClaimId(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
