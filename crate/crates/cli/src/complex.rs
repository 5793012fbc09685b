//! Complex literals of the form `a+bi`, `a-bi`, `3`, `2i`, `-i`.

use penta_core::ComplexScalar;

use crate::error::CliError;

fn number(text: &str, whole: &str) -> Result<f64, CliError> {
    let v: f64 = text
        .parse()
        .map_err(|_| CliError::Invalid(format!("invalid complex literal {whole:?}")))?;
    if !v.is_finite() {
        return Err(CliError::Invalid(format!(
            "non-finite complex literal {whole:?}"
        )));
    }
    Ok(v)
}

/// Imaginary coefficient; a bare sign means one.
fn imaginary(text: &str, whole: &str) -> Result<f64, CliError> {
    match text {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        t => number(t, whole),
    }
}

pub fn parse_complex(literal: &str) -> Result<ComplexScalar, CliError> {
    let s = literal.trim();
    if s.is_empty() {
        return Err(CliError::Invalid("empty complex literal".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(ComplexScalar::new(number(s, literal)?, 0.0));
    };
    // The real/imaginary split is the last sign that is neither leading nor
    // part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(ComplexScalar::new(
            number(&body[..k], literal)?,
            imaginary(&body[k..], literal)?,
        )),
        None => Ok(ComplexScalar::new(0.0, imaginary(body, literal)?)),
    }
}
