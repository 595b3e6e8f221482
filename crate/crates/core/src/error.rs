use thiserror::Error;

/// Errors raised by the algebra toolkit.
///
/// Basis indices carried in error payloads are zero-based; the `Display`
/// output renders them as `e1..en`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("algebra is not left-symmetric: (x,y,z) != (y,x,z) at (e{}, e{}, e{})", .witness.0 + 1, .witness.1 + 1, .witness.2 + 1)]
    NotLeftSymmetric { witness: (usize, usize, usize) },

    #[error("algebra is not a Novikov algebra")]
    NotNovikov,

    #[error("algebra is not a derivation algebra")]
    NotDerivation,

    #[error("subspace is not a two-sided ideal")]
    NotIdeal,

    #[error("subspace is not closed under the product")]
    NotSubalgebra,

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("polynomial degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("integer {0} is too large to factor by trial division")]
    IntegerTooLarge(String),

    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,

    #[error("algebra is already defined over the Gaussian rationals")]
    AlreadyGaussian,

    #[error("operation requires an algebra of dimension at least 1")]
    EmptyAlgebra,

    #[error("simplicity undecided after {budget} random elements")]
    Undecided { budget: usize },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("idempotent search exhausted: {0}")]
    IdempotentSearch(String),

    #[error("unknown catalog example `{0}`")]
    UnknownExample(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
}

pub type Result<T> = std::result::Result<T, Error>;
