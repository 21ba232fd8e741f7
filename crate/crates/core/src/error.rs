use thiserror::Error;

/// Errors raised by the library operations.
///
/// Mathematical refutations are not errors; they are reported through
/// [`crate::hyperb::Verdict`] or plain `false` results.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial vanishes at the direction vector (p(e) = 0)")]
    VanishesAtDirection,

    #[error("line restriction has non-real roots: not hyperbolic along this line")]
    NonRealRoots,

    #[error("target degree {target} is below the polynomial degree {degree}")]
    DegreeTooSmall { target: usize, degree: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("pencil must contain at least one matrix")]
    EmptyPencil,

    #[error("polynomial must satisfy p(1,0) = 1, found {0}")]
    NotNormalized(String),

    #[error("certificate does not verify: {0}")]
    InvalidCertificate(String),

    #[error("no witness guaranteed for n = {0}; need n > 3")]
    NoWitnessGuaranteed(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
