//! Integer powers of even-order complex pentadiagonal 2-Toeplitz matrices.
//!
//! The crate builds `K_n`, evaluates its associated polynomial sequences,
//! produces the closed-form spectrum and transform pair, and assembles
//! `K_n^s` for any integer `s` entry by entry. An independent dense oracle
//! ([`oracle`]) is provided for verification.

pub mod dense;
pub mod error;
pub mod oracle;
pub mod penta;
pub mod poly_seq;
pub mod powers;
pub mod spectral;

/// Double-precision complex scalar used throughout.
pub type ComplexScalar = num_complex::Complex64;

pub use dense::DenseMatrix;
pub use error::{Error, Result};
pub use penta::{build_matrix, validate_params, PentaMatrix, PentaParams};
pub use poly_seq::{
    chebyshev_u, coefficient_sequences, eval_p, eval_sequences, p_coefficients,
    CoefficientSequences, PolyCoefficients, SeqEvaluation,
};
pub use powers::{
    check_invertible, matrix_power, power_entry, Invertibility, PowerEngine, PowerResult,
};
pub use spectral::{
    build_transform, char_poly_eval, char_poly_eval_sequences, eigenvalues, eigenvector, Spectrum,
    TransformPair,
};
