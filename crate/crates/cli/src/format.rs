//! Parameter files and result serialization.
//!
//! Parameter files are flat JSON objects with complex numbers as `[re, im]`
//! pairs:
//!
//! ```json
//! {"a1":[1,0],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8}
//! ```

use std::path::Path;

use penta_core::{ComplexScalar, DenseMatrix, PentaParams, Spectrum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub b1: [f64; 2],
    pub b2: [f64; 2],
    pub c1: [f64; 2],
    pub c2: [f64; 2],
    pub n: usize,
}

fn pair(z: ComplexScalar) -> [f64; 2] {
    [z.re, z.im]
}

fn complex(p: [f64; 2]) -> ComplexScalar {
    ComplexScalar::new(p[0], p[1])
}

impl From<&PentaParams> for ParamsFile {
    fn from(p: &PentaParams) -> Self {
        Self {
            a1: pair(p.a1),
            a2: pair(p.a2),
            b1: pair(p.b1),
            b2: pair(p.b2),
            c1: pair(p.c1),
            c2: pair(p.c2),
            n: p.n,
        }
    }
}

impl From<ParamsFile> for PentaParams {
    fn from(f: ParamsFile) -> Self {
        PentaParams::new(
            complex(f.a1),
            complex(f.a2),
            complex(f.b1),
            complex(f.b2),
            complex(f.c1),
            complex(f.c2),
            f.n,
        )
    }
}

pub fn parse_params(text: &str) -> Result<PentaParams, CliError> {
    let file: ParamsFile = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("invalid parameter file: {e}")))?;
    Ok(file.into())
}

pub fn read_params(path: &Path) -> Result<PentaParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_params(&text)
}

#[cfg(test)]
pub fn params_to_json(p: &PentaParams) -> String {
    serde_json::to_string(&ParamsFile::from(p)).expect("parameter file serializes")
}

/// Shortest `%g`-style rendering with `digits` significant digits.
pub fn format_significant(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_fraction(mantissa);
        format!("{mantissa}e{exp}")
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `re+imi` / `re-imi` with twelve significant digits.
pub fn format_complex(z: ComplexScalar) -> String {
    let re = format_significant(z.re, 12);
    let im = format_significant(z.im.abs(), 12);
    let sign = if z.im.is_sign_negative() && z.im != 0.0 {
        '-'
    } else {
        '+'
    };
    format!("{re}{sign}{im}i")
}

pub fn matrix_json(m: &DenseMatrix) -> String {
    let rows: Vec<Vec<[f64; 2]>> = m
        .rows()
        .map(|r| r.iter().map(|&z| pair(z)).collect())
        .collect();
    serde_json::to_string(&rows).expect("matrix serializes")
}

pub fn matrix_csv(m: &DenseMatrix) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix(m: &DenseMatrix, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => matrix_json(m) + "\n",
        OutputFormat::Csv => matrix_csv(m),
    }
}

pub fn spectrum(spec: &Spectrum, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let entries: Vec<_> = spec
                .eigenvalues()
                .iter()
                .zip(spec.weights())
                .enumerate()
                .map(|(k, (&alpha, &q))| json!({"k": k + 1, "alpha": pair(alpha), "q": pair(q)}))
                .collect();
            let doc = json!({
                "n": spec.len(),
                "r1": pair(spec.r1()),
                "r2": pair(spec.r2()),
                "eigenvalues": entries,
            });
            doc.to_string() + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,alpha,q\n");
            for (k, (&alpha, &q)) in spec.eigenvalues().iter().zip(spec.weights()).enumerate() {
                out.push_str(&format!(
                    "{},{},{}\n",
                    k + 1,
                    format_complex(alpha),
                    format_complex(q)
                ));
            }
            out.push_str(&format!("r1,{}\n", format_complex(spec.r1())));
            out.push_str(&format!("r2,{}\n", format_complex(spec.r2())));
            out
        }
    }
}

/// Characteristic polynomial value, with the oracle determinant and gap when
/// verification ran.
pub fn char_poly(
    x: ComplexScalar,
    value: ComplexScalar,
    check: Option<(ComplexScalar, f64)>,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut doc = json!({"x": pair(x), "value": pair(value)});
            if let Some((det, gap)) = check {
                doc["oracle"] = json!(pair(det));
                doc["relative_gap"] = json!(gap);
            }
            doc.to_string() + "\n"
        }
        OutputFormat::Csv => match check {
            Some((det, gap)) => format!(
                "x,value,oracle,relative_gap\n{},{},{},{}\n",
                format_complex(x),
                format_complex(value),
                format_complex(det),
                format_significant(gap, 12)
            ),
            None => format!("x,value\n{},{}\n", format_complex(x), format_complex(value)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reads_documented_example() {
        let p = parse_params(
            r#"{"a1":[1,0],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8}"#,
        )
        .unwrap();
        assert_eq!(p.a2, ComplexScalar::new(1.0, 1.0));
        assert_eq!(p.n, 8);
    }

    #[test]
    fn rejects_malformed_files() {
        for bad in [
            r#"{"a1":[1,0]}"#,
            r#"{"a1":[1],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8}"#,
            r#"{"a1":[1,0],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8,"x":1}"#,
            r#"{"a1":[1,0],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":-2}"#,
            "not json",
        ] {
            assert!(
                matches!(parse_params(bad), Err(CliError::Invalid(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(46.0, 12), "46");
        assert_eq!(format_significant(0.3375, 12), "0.3375");
        assert_eq!(format_significant(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_significant(-2.0e-7, 12), "-2e-7");
        assert_eq!(format_significant(1.5e15, 12), "1.5e15");
        assert_eq!(format_significant(123456789012.4, 12), "123456789012");
    }

    #[test]
    fn complex_cells() {
        assert_eq!(format_complex(ComplexScalar::new(16.0, 68.0)), "16+68i");
        assert_eq!(
            format_complex(ComplexScalar::new(-0.5, -0.25)),
            "-0.5-0.25i"
        );
        assert_eq!(format_complex(ComplexScalar::new(0.0, 0.0)), "0+0i");
        assert_eq!(format_complex(ComplexScalar::new(0.0, -0.0)), "0+0i");
    }

    #[test]
    fn csv_cells_parse_back() {
        let z = ComplexScalar::new(-1.25e-9, 3.5);
        assert_eq!(
            crate::complex::parse_complex(&format_complex(z)).unwrap(),
            z
        );
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            any::<f64>().prop_filter("finite", |v| v.is_finite()),
            -10.0f64..10.0,
        ]
    }

    fn pair_strategy() -> impl Strategy<Value = [f64; 2]> {
        (finite(), finite()).prop_map(|(a, b)| [a, b])
    }

    proptest! {
        #[test]
        fn params_round_trip_bit_for_bit(
            a1 in pair_strategy(), a2 in pair_strategy(), b1 in pair_strategy(),
            b2 in pair_strategy(), c1 in pair_strategy(), c2 in pair_strategy(), n in 0usize..1000,
        ) {
            let p: PentaParams = ParamsFile { a1, a2, b1, b2, c1, c2, n }.into();
            let back = parse_params(&params_to_json(&p)).unwrap();
            let bits = |q: &PentaParams| {
                [q.a1, q.a2, q.b1, q.b2, q.c1, q.c2]
                    .iter()
                    .flat_map(|z| [z.re.to_bits(), z.im.to_bits()])
                    .collect::<Vec<_>>()
            };
            prop_assert_eq!(bits(&back), bits(&p));
            prop_assert_eq!(back.n, n);
        }
    }
}
