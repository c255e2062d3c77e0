use thiserror::Error;

/// Errors produced by the library.
///
/// Mathematical *verdicts* (an axiom that fails, a non-homogeneous
/// derivation) are reported as values, not errors. Errors are reserved for
/// contract violations and inputs the library refuses to interpret.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient ring mismatch: [{left}] vs [{right}]")]
    AmbientMismatch { left: String, right: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no image given for variable `{0}`")]
    MissingImage(String),

    #[error("division is not exact")]
    NonExactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot invert non-monomial image of `{0}`")]
    NonMonomialInverse(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("undecided regime: {0}")]
    UndecidedRegime(String),

    #[error("derivation is not locally nilpotent: {0}")]
    NotLocallyNilpotent(String),

    #[error("exponential series did not terminate within {0} steps")]
    ExpDidNotTerminate(usize),

    #[error("embedding not polynomial: {0}")]
    EmbeddingNotPolynomial(String),

    #[error("parameter constraint violated: {0}")]
    Constraint(String),

    #[error("algebra rejected: {0}")]
    BadAlgebra(String),

    #[error("kernel condition violated: {0}")]
    KernelConditionViolated(String),

    #[error("invalid commuting pair: {0}")]
    InvalidPair(String),

    #[error("missing family metadata")]
    MissingMetadata,

    #[error("wrong family: {0}")]
    WrongFamily(String),

    #[error("no zero element declared")]
    NoZero,

    #[error("parameter name clash: `{0}`")]
    ParameterClash(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
