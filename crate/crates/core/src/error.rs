use thiserror::Error;

/// Errors raised by ring construction, bundle calculus and the counting pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid relation for generator `{generator}`: {reason}")]
    InvalidRelation { generator: String, reason: String },

    #[error("classes belong to different rings")]
    RingMismatch,

    #[error("expected a homogeneous class of degree {expected}")]
    NotHomogeneous { expected: u32 },

    #[error("expected a rank-one bundle, got rank {0}")]
    NotALine(usize),

    #[error("class has a nonzero component of degree {found}, above the cycle dimension {dim}")]
    DegreeTooHigh { found: u32, dim: u32 },

    #[error("functional has no weight for monomial {0:?}")]
    MissingWeight(Vec<u32>),

    #[error(
        "generator `{0}` cannot be pushed forward (it must be the last generator of the ring)"
    )]
    NotPushable(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("{name} requires degree d >= {min}, got {d}")]
    BelowMinDegree { name: String, d: i64, min: i64 },

    #[error("{what}: {value} is not exactly divisible by {divisor}")]
    NonExactDivision {
        what: String,
        value: String,
        divisor: String,
    },

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(i64),

    #[error("classical count is only available for 1 <= d <= 4, got {0}")]
    ClassicalOutOfRange(i64),

    #[error("recursion produced a non-integral value at d = {0}")]
    NonIntegral(u32),

    #[error("memo table conflict at d = {degree}: {existing} ({existing_source}) vs {new} ({new_source})")]
    Disagreement {
        degree: u32,
        existing: String,
        existing_source: String,
        new: String,
        new_source: String,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid multiplicity {0}; local models only produce 1, 2, 3, 4 or 6")]
    InvalidMultiplicity(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
