use thiserror::Error;

/// Kinds of structural validation failure for loaded or constructed tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidationKind {
    NotCommutative,
    NotJordan,
    NotAntisymmetric,
    NotJacobi,
    NotAssociative,
    BadInvolution,
    IndexOutOfRange,
}

impl std::fmt::Display for ValidationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rational reconstruction failed after {primes} primes")]
    ReconstructionFailed { primes: usize },

    #[error("structure table is not commutative at ({0}, {1})")]
    NotCommutative(usize, usize),

    #[error("parameter {index} must be nonzero")]
    ZeroParameter { index: usize },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("element is not skew under the involution")]
    NotSkew,

    #[error("required square root {0} is not rational")]
    IrrationalSurd(String),

    #[error("operator space not closed under the bracket: [{0}, {1}] escapes")]
    NotClosed(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {kind} at {indices:?}")]
    Validation {
        kind: ValidationKind,
        indices: Vec<usize>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
