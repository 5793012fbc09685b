//! `penta`: closed-form powers, spectra and characteristic polynomials of
//! even-order pentadiagonal 2-Toeplitz matrices.
//!
//! Exit codes: 0 success, 2 invalid input, 3 degenerate spectrum, 4 singular
//! matrix with a negative exponent, 5 verification beyond tolerance.

mod complex;
mod error;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use penta_core::oracle::{dense_determinant, dense_inverse, dense_power};
use penta_core::{
    build_matrix, char_poly_eval, eigenvalues, ComplexScalar, DenseMatrix, PentaParams, PowerEngine,
};

use crate::error::CliError;
use crate::format::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "penta", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute W(s) = K^s for an integer s.
    Power {
        #[command(flatten)]
        common: CommonArgs,
        /// Exponent (may be negative).
        #[arg(long = "s", allow_negative_numbers = true)]
        s: i64,
    },
    /// List eigenvalues alpha_k with weights q_k and the ratios r1, r2.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Evaluate det(xI - K).
    Charpoly {
        #[command(flatten)]
        common: CommonArgs,
        /// Complex point, e.g. "1.5-2i".
        #[arg(long = "x", allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// JSON parameter file.
    #[arg(long)]
    params: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Output file, or "stdout".
    #[arg(long, default_value = "stdout")]
    out: String,
    /// Cross-check against the dense oracle.
    #[arg(long)]
    verify: bool,
    /// Verification tolerance.
    #[arg(long, env = "PENTA_TOL", default_value_t = 1e-8)]
    tol: f64,
}

/// Everything a job needs after argument parsing.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub params: PentaParams,
    pub exponent: i64,
    pub output_format: OutputFormat,
    pub tolerance: f64,
    pub verify: bool,
}

impl JobConfig {
    fn from_args(common: &CommonArgs, exponent: i64) -> Result<Self, CliError> {
        if !(common.tol > 0.0 && common.tol.is_finite()) {
            return Err(CliError::Invalid(format!(
                "tolerance must be positive, got {}",
                common.tol
            )));
        }
        let params = format::read_params(&common.params)?;
        params.validate()?;
        Ok(Self {
            params,
            exponent,
            output_format: common.format,
            tolerance: common.tol,
            verify: common.verify,
        })
    }
}

/// Serialized output plus an optional verification failure to report after
/// the output has been written.
struct JobOutput {
    text: String,
    report: Option<String>,
    failure: Option<CliError>,
}

fn oracle_power(k: &DenseMatrix, s: i64) -> Result<DenseMatrix, CliError> {
    let exponent = u32::try_from(s.unsigned_abs())
        .map_err(|_| CliError::Invalid(format!("exponent {s} too large to verify")))?;
    if s < 0 {
        let inv = dense_inverse(k)?;
        Ok(dense_power(&inv.inverse, exponent)?)
    } else {
        Ok(dense_power(k, exponent)?)
    }
}

fn cmd_power(config: &JobConfig) -> Result<JobOutput, CliError> {
    let engine = PowerEngine::new(&config.params)?;
    let result = engine.matrix(config.exponent)?;
    let text = format::matrix(&result.matrix, config.output_format);
    if !config.verify {
        return Ok(JobOutput {
            text,
            report: None,
            failure: None,
        });
    }
    let k = build_matrix(&config.params)?;
    let reference = oracle_power(k.as_dense(), config.exponent)?;
    let error = result.matrix.max_relative_diff(&reference)?;
    Ok(verification_output(text, error, config.tolerance))
}

fn cmd_spectrum(config: &JobConfig) -> Result<JobOutput, CliError> {
    let spec = eigenvalues(&config.params)?;
    Ok(JobOutput {
        text: format::spectrum(&spec, config.output_format),
        report: None,
        failure: None,
    })
}

fn cmd_charpoly(config: &JobConfig, x: ComplexScalar) -> Result<JobOutput, CliError> {
    let value = char_poly_eval(&config.params, x)?;
    if !config.verify {
        return Ok(JobOutput {
            text: format::char_poly(x, value, None, config.output_format),
            report: None,
            failure: None,
        });
    }
    let k = build_matrix(&config.params)?;
    let shifted = DenseMatrix::from_fn(config.params.n, |i, j| {
        let d = if i == j {
            x
        } else {
            ComplexScalar::new(0.0, 0.0)
        };
        d - k[(i, j)]
    });
    let det = dense_determinant(&shifted);
    let gap = (value - det).norm() / det.norm().max(1.0);
    let text = format::char_poly(x, value, Some((det, gap)), config.output_format);
    Ok(verification_output(text, gap, config.tolerance))
}

fn verification_output(text: String, error: f64, tolerance: f64) -> JobOutput {
    let passed = error <= tolerance;
    JobOutput {
        text,
        report: Some(format!(
            "verify: max relative error {error:.3e} (tolerance {tolerance:.3e}) {}",
            if passed { "ok" } else { "FAILED" }
        )),
        failure: (!passed).then_some(CliError::Verification { error, tolerance }),
    }
}

fn write_output(out: &str, text: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: out.to_string(),
        source,
    };
    if out == "stdout" || out == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(text.as_bytes()).map_err(io_err)?;
        stdout.flush().map_err(io_err)
    } else {
        std::fs::write(out, text).map_err(io_err)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (common, output) = match &cli.command {
        Command::Power { common, s } => (common, cmd_power(&JobConfig::from_args(common, *s)?)?),
        Command::Spectrum { common } => (common, cmd_spectrum(&JobConfig::from_args(common, 1)?)?),
        Command::Charpoly { common, x } => {
            let x = complex::parse_complex(x)?;
            (common, cmd_charpoly(&JobConfig::from_args(common, 1)?, x)?)
        }
    };
    write_output(&common.out, &output.text)?;
    if let Some(report) = output.report {
        eprintln!("{report}");
    }
    match output.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
