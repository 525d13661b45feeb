use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Internal` and `Assembly` signal violated invariants that should never
/// occur on valid input; everything else reports a problem with the input
/// itself.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("Jacobi identity violated at basis triple ({a}, {b}, {c})")]
    JacobiViolation { a: String, b: String, c: String },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("zero polynomial has no squarefree part")]
    ZeroPolynomial,

    #[error("operation requires a trivial center, but dim Z(g) = {dim}")]
    NonzeroCenter { dim: usize },

    #[error("unknown catalog algebra `{0}`")]
    UnknownCatalog(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("assembly failure: {0}")]
    Assembly(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the CLI maps this error to: 1 for input problems,
    /// 2 for internal invariant failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::Assembly(_) => 2,
            _ => 1,
        }
    }
}
