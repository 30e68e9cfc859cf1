use thiserror::Error;

/// Errors shared by every engine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the zero polynomial has no well-defined root set")]
    ZeroPolynomial,
    #[error("resource cap exceeded while {what} (cap {cap})")]
    ResourceExceeded { what: &'static str, cap: u64 },
    #[error("subspaces have different ambient dimensions")]
    AmbientMismatch,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix sizes do not match")]
    SizeMismatch,
    #[error("nonunital closure of an empty generator set")]
    EmptyGenerators,
    #[error("trace-form radical needs characteristic 0 or p > n, got p = {p}, n = {n}")]
    CharacteristicTooSmall { p: u64, n: usize },
    #[error("subspace is not a two-sided ideal of the algebra")]
    NotAnIdeal,
    #[error("algebra element is not triangular for the given flag")]
    NotTriangularForFlag,
    #[error("operator is not triangular for the index order")]
    NotTriangular,
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
