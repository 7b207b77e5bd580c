use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("gcd of the generators is {0}, expected 1")]
    GcdNotOne(i64),
    #[error("arithmetic overflow in 64-bit range")]
    Overflow,
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("expected a nonzero element")]
    ZeroElement,
    #[error("enumeration would exceed the cap of {cap} items")]
    LimitExceeded { cap: usize },
    #[error("generator index {index} out of range for embedding dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("relative ideals live over different semigroups")]
    AmbientMismatch,
    #[error("invalid NG-vector: {0}")]
    InvalidNgVector(String),
    #[error("{0} is not a pseudo-Frobenius number")]
    NotPseudoFrobenius(i64),
    #[error("matrix mismatch: {0}")]
    MatrixMismatch(String),
    #[error("{0} is a minimal generator")]
    IsMinimalGenerator(i64),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error("generators {0:?} are not a minimal system")]
    NotMinimal(Vec<i64>),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

impl Error {
    /// Stable variant name, used as a machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::Overflow => "Overflow",
            Error::NotInSemigroup(_) => "NotInSemigroup",
            Error::ZeroElement => "ZeroElement",
            Error::LimitExceeded { .. } => "LimitExceeded",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::InvalidNgVector(_) => "InvalidNgVector",
            Error::NotPseudoFrobenius(_) => "NotPseudoFrobenius",
            Error::MatrixMismatch(_) => "MatrixMismatch",
            Error::IsMinimalGenerator(_) => "IsMinimalGenerator",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotMinimal(_) => "NotMinimal",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::ResourceLimit(_) => "ResourceLimit",
        }
    }
}
