use thiserror::Error;

/// Errors raised by the algebra and coding routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inverse of zero")]
    InverseOfZero,

    #[error("operands belong to different field contexts")]
    MixedFieldContexts,

    #[error("invalid field specification: {0}")]
    InvalidFieldSpec(String),

    #[error("invalid context specification: {0}")]
    InvalidContextSpec(String),

    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },

    #[error("field of order {q} exceeds the supported maximum {max}")]
    FieldTooLarge { q: u64, max: u64 },

    #[error("element index {index} is out of range for a field of order {q}")]
    InvalidElement { index: u64, q: u32 },

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    #[error("conjugation by zero")]
    ConjugateByZero,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("generator does not right-divide the modulus")]
    NotRightDivisor,

    #[error("enumeration of {size} items exceeds the limit {limit}")]
    TooLargeToEnumerate { size: u128, limit: u128 },

    #[error("search space of {size} candidates exceeds the limit {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },

    #[error("precondition violated: {}", .0.join("; "))]
    PreconditionViolated(Vec<String>),

    #[error("no Bezout solution for the projection system")]
    NoBezoutSolution,

    #[error(
        "decomposition hypothesis violated: representatives {first} and {second} lie in the same conjugacy class"
    )]
    DecompositionHypothesisViolated { first: u32, second: u32 },

    #[error("eigenspaces do not form a direct sum: dimensions sum to {dim_sum}, stacked rank {rank}, length {n}")]
    NotDirectSum { dim_sum: usize, rank: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InverseOfZero => "InverseOfZero",
            Error::MixedFieldContexts => "MixedFieldContexts",
            Error::InvalidFieldSpec(_) => "InvalidFieldSpec",
            Error::InvalidContextSpec(_) => "InvalidContextSpec",
            Error::ReducibleModulus { .. } => "ReducibleModulus",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::InvalidElement { .. } => "InvalidElement",
            Error::DivisionByZeroPoly => "DivisionByZeroPoly",
            Error::ConjugateByZero => "ConjugateByZero",
            Error::NotMonic => "NotMonic",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::SingularMatrix => "SingularP",
            Error::NotRightDivisor => "NotRightDivisor",
            Error::TooLargeToEnumerate { .. } => "TooLargeToEnumerate",
            Error::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NoBezoutSolution => "NoBezoutSolution",
            Error::DecompositionHypothesisViolated { .. } => "DecompositionHypothesisViolated",
            Error::NotDirectSum { .. } => "NotDirectSum",
            Error::Parse(_) => "Parse",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(vec![msg.into()])
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
