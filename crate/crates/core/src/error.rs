use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("variable count mismatch: expected n = {expected}, found n = {found}")]
    VariableMismatch { expected: usize, found: usize },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("field characteristic {characteristic} does not exceed degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("coefficient vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("linear form has all coefficients zero")]
    ZeroLinearForm,

    #[error("points {0} and {1} are proportional")]
    ProportionalPoints(usize, usize),

    #[error("factors {0} and {1} are proportional")]
    ProportionalFactors(usize, usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("form is not annihilated by the given hyperplane")]
    InvalidPoint,

    #[error("no generic configuration found after {attempts} attempts: {reason}")]
    GenericityFailure { attempts: usize, reason: String },

    #[error("enumeration of {size} candidates exceeds the guard of {guard}")]
    EnumerationTooLarge { size: String, guard: u64 },

    #[error("VSH is not zero-dimensional for (n, d) = ({n}, {d}): dimension {dim}")]
    NotZeroDimensional { n: usize, d: usize, dim: i64 },

    #[error("kernel element does not split into distinct rational roots")]
    SplittingFailure,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
