use thiserror::Error;

/// Errors raised by field, polynomial, code and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field size {size} exceeds the configured bound {bound}")]
    FieldTooLarge { size: u64, bound: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not a generator of the multiplicative group")]
    NotAGenerator(u32),
    #[error("element {0} is out of range for the field")]
    ElementOutOfRange(u32),

    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial must be monic and non-constant")]
    NotMonic,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(u32),
    #[error("denominator vanishes at {0}")]
    PoleInField(u32),
    #[error("polynomial is reducible")]
    Reducible,

    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("polynomial degree {degree} is too high for dimension {k}")]
    DegreeTooHigh { degree: usize, k: usize },
    #[error("word length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("search size {size} exceeds the configured bound {bound} ({what})")]
    BoundExceeded { what: &'static str, size: u64, bound: u64 },
    #[error("operation requires a {0} code")]
    WrongCodeKind(&'static str),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("set is not {r}-zero-sum-free")]
    NotZeroSumFree { r: usize },
    #[error("element {0} lies in the evaluation set")]
    PointInEvaluationSet(u32),
    #[error("invalid subset: {0}")]
    InvalidSet(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
