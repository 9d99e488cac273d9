use thiserror::Error;

/// Errors raised by the verification engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("truncation order must be non-negative, got {0}")]
    NegativeOrder(i64),
    #[error("{len} coefficients do not fit a series truncated at order {order}")]
    TooManyCoefficients { len: usize, order: usize },
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series constant term must be 1 to invert, got {0}")]
    NonUnitConstant(String),
    #[error("substitution multiplier must be positive")]
    ZeroMultiplier,
    #[error("invalid factor family: {0}")]
    InvalidFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration guard exceeded: n = {n} > {limit}")]
    EnumerationGuard { n: u64, limit: u64 },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown arithmetic function `{0}`")]
    UnknownFunction(String),
    #[error("function `{0}` requires the parameter s")]
    MissingParameter(String),
    #[error("unknown constraint `{0}`")]
    UnknownConstraint(String),
    #[error("value {value} out of range {range}")]
    OutOfRange { value: String, range: String },
    #[error("points must have pairwise distinct coordinates")]
    RepeatedCoordinates,
    #[error("determinant in the denominator vanishes at this point")]
    SingularDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
