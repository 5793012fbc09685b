use penta_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error(
        "verification failed: max relative error {error:.3e} exceeds tolerance {tolerance:.3e}"
    )]
    Verification { error: f64, tolerance: f64 },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Process exit code. The set of codes is fixed: 2 for bad input, 3 for
    /// a degenerate spectrum, 4 for a singular matrix with s < 0, 5 for a
    /// failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::Io { .. } => 2,
            CliError::Core(e) => match e {
                CoreError::DegenerateSpectrum { .. } => 3,
                CoreError::SingularMatrix { .. } | CoreError::NumericallySingular { .. } => 4,
                _ => 2,
            },
            CliError::Verification { .. } => 5,
        }
    }
}
