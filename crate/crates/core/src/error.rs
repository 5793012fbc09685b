use thiserror::Error;

/// Errors produced by construction, spectral and power operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("band parameter {name} must be nonzero")]
    ZeroBandParameter { name: &'static str },

    #[error("matrix order must be at least 2, got {n}")]
    BadOrder { n: usize },

    #[error("parameter {name} is not finite")]
    NonFinite { name: &'static str },

    #[error("closed-form spectrum and powers require an even order, got n = {n}")]
    UnsupportedOddOrder { n: usize },

    #[error(
        "eigenvalues alpha_{i} and alpha_{j} coincide (gap {gap:.3e}); the spectrum is not simple"
    )]
    DegenerateSpectrum { i: usize, j: usize, gap: f64 },

    #[error("matrix is singular: zero eigenvalue at k = {offending:?}")]
    SingularMatrix { offending: Vec<usize> },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is numerically singular (pivot modulus {pivot:.3e} at column {column})")]
    NumericallySingular { column: usize, pivot: f64 },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
