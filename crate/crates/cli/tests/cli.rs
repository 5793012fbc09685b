use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const COMPLEX8: &str =
    r#"{"a1":[1,0],"a2":[1,1],"b1":[3,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8}"#;
const REAL10: &str =
    r#"{"a1":[1,0],"a2":[2,0],"b1":[3,0],"b2":[4,0],"c1":[5,0],"c2":[6,0],"n":10}"#;

struct Fixture {
    dir: TempDir,
}

impl Fixture {
    fn new() -> Self {
        Self {
            dir: TempDir::new().unwrap(),
        }
    }

    fn params(&self, name: &str, json: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, json).unwrap();
        path
    }
}

fn penta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penta"))
        .args(args)
        .env_remove("PENTA_TOL")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json_matrix(out: &Output) -> Vec<Vec<(f64, f64)>> {
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    doc.as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap()))
                .collect()
        })
        .collect()
}

#[test]
fn complex_order8_cube_verifies() {
    let fx = Fixture::new();
    let p = fx.params("complex8.json", COMPLEX8);
    let out = penta(&[
        "power",
        "--params",
        p.to_str().unwrap(),
        "--s",
        "3",
        "--verify",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let w = json_matrix(&out);
    assert_eq!(w.len(), 8);
    let near = |z: (f64, f64), re: f64, im: f64| (z.0 - re).abs() < 1e-9 && (z.1 - im).abs() < 1e-9;
    assert!(near(w[0][0], 46.0, 0.0));
    assert!(near(w[1][1], 16.0, 68.0));
    assert!(near(w[3][5], 96.0, 132.0));
    assert!(near(w[0][1], 0.0, 0.0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ok"));
}

#[test]
fn real_order10_inverse_fourth_power() {
    let fx = Fixture::new();
    let p = fx.params("real10.json", REAL10);
    let out = penta(&[
        "power",
        "--params",
        p.to_str().unwrap(),
        "--s",
        "-4",
        "--verify",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let w = json_matrix(&out);
    for (i, j, expected) in [
        (0, 0, 0.3375),
        (8, 0, 0.9148),
        (4, 4, 0.3337),
        (9, 1, 0.0388),
    ] {
        assert!(
            (w[i][j].0 - expected).abs() < 5e-5,
            "w{},{} = {:?}",
            i + 1,
            j + 1,
            w[i][j]
        );
    }
}

#[test]
fn csv_output_to_file() {
    let fx = Fixture::new();
    let p = fx.params("complex8.json", COMPLEX8);
    let target = fx.dir.path().join("w.csv");
    let out = penta(&[
        "power",
        "--params",
        p.to_str().unwrap(),
        "--s",
        "3",
        "--format",
        "csv",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(target).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.len() == 8));
    assert_eq!(rows[0][0], "46+0i");
    assert_eq!(rows[1][1], "16+68i");
}

#[test]
fn spectrum_lists_every_eigenvalue() {
    let fx = Fixture::new();
    let p = fx.params("real10.json", REAL10);
    let out = penta(&["spectrum", "--params", p.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let eig = doc["eigenvalues"].as_array().unwrap();
    assert_eq!(eig.len(), 10);
    assert!((eig[8]["alpha"][0].as_f64().unwrap() - 7.7082).abs() < 1e-4);
    assert!(doc["r1"][0].as_f64().unwrap() > 0.0);

    let csv = penta(&[
        "spectrum",
        "--params",
        p.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("k,alpha,q\n"));
    assert_eq!(text.lines().count(), 1 + 10 + 2);
}

#[test]
fn charpoly_vanishes_at_an_eigenvalue() {
    let fx = Fixture::new();
    let p = fx.params("real10.json", REAL10);
    // alpha_5 = 1 exactly for these parameters.
    let out = penta(&[
        "charpoly",
        "--params",
        p.to_str().unwrap(),
        "--x",
        "1",
        "--verify",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let value = (
        doc["value"][0].as_f64().unwrap(),
        doc["value"][1].as_f64().unwrap(),
    );
    assert!(value.0.hypot(value.1) < 1e-6, "{value:?}");
}

#[test]
fn charpoly_accepts_negative_complex_point() {
    let fx = Fixture::new();
    let p = fx.params("complex8.json", COMPLEX8);
    let out = penta(&[
        "charpoly",
        "--params",
        p.to_str().unwrap(),
        "--x",
        "-1-2i",
        "--verify",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["relative_gap"].as_f64().unwrap() < 1e-10);
}

#[test]
fn zero_band_parameter_is_invalid() {
    let fx = Fixture::new();
    let p = fx.params(
        "bad.json",
        r#"{"a1":[1,0],"a2":[1,1],"b1":[0,0],"b2":[3,1],"c1":[5,0],"c2":[5,1],"n":8}"#,
    );
    let out = penta(&["power", "--params", p.to_str().unwrap(), "--s", "2"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("b1"));
}

#[test]
fn odd_order_is_invalid_for_every_subcommand() {
    let fx = Fixture::new();
    let p = fx.params(
        "odd.json",
        r#"{"a1":[1,0],"a2":[2,0],"b1":[3,0],"b2":[4,0],"c1":[5,0],"c2":[6,0],"n":7}"#,
    );
    let p = p.to_str().unwrap();
    for args in [
        vec!["power", "--params", p, "--s", "2"],
        vec!["spectrum", "--params", p],
        vec!["charpoly", "--params", p, "--x", "0"],
    ] {
        assert_eq!(code(&penta(&args)), 2, "{args:?}");
    }
}

#[test]
fn malformed_inputs_are_invalid() {
    let fx = Fixture::new();
    let garbage = fx.params("garbage.json", "{ not json");
    assert_eq!(
        code(&penta(&["spectrum", "--params", garbage.to_str().unwrap()])),
        2
    );
    let missing = fx.dir.path().join("missing.json");
    assert_eq!(
        code(&penta(&["spectrum", "--params", missing.to_str().unwrap()])),
        2
    );
    let p = fx.params("complex8.json", COMPLEX8);
    let p = p.to_str().unwrap();
    assert_eq!(code(&penta(&["charpoly", "--params", p, "--x", "1+2j"])), 2);
    assert_eq!(code(&penta(&["power", "--params", p, "--s", "two"])), 2);
    assert_eq!(
        code(&penta(&["power", "--params", p, "--s", "2", "--tol", "-1"])),
        2
    );
    assert_eq!(
        code(&penta(&[
            "power", "--params", p, "--s", "2", "--format", "xml"
        ])),
        2
    );
}

#[test]
fn coinciding_spectra_are_degenerate() {
    let fx = Fixture::new();
    // Identical odd and even families share every eigenvalue.
    let p = fx.params(
        "deg.json",
        r#"{"a1":[1,0],"a2":[1,0],"b1":[2,0],"b2":[2,0],"c1":[3,0],"c2":[3,0],"n":6}"#,
    );
    let p = p.to_str().unwrap();
    assert_eq!(code(&penta(&["power", "--params", p, "--s", "2"])), 3);
    assert_eq!(code(&penta(&["spectrum", "--params", p])), 3);
}

#[test]
fn zero_eigenvalue_blocks_negative_powers() {
    let fx = Fixture::new();
    // n = 4: alpha_1 = a1 - 2 cos(pi/3) = 0.
    let p = fx.params(
        "sing.json",
        r#"{"a1":[1,0],"a2":[5,0],"b1":[1,0],"b2":[1,0],"c1":[1,0],"c2":[1,0],"n":4}"#,
    );
    let p = p.to_str().unwrap();
    let out = penta(&["power", "--params", p, "--s", "-1"]);
    assert_eq!(code(&out), 4);
    assert!(out.stdout.is_empty());
    assert_eq!(
        code(&penta(&["power", "--params", p, "--s", "2", "--verify"])),
        0
    );
}

#[test]
fn verification_failure_still_writes_output() {
    let fx = Fixture::new();
    let p = fx.params("real10.json", REAL10);
    let out = penta(&[
        "power",
        "--params",
        p.to_str().unwrap(),
        "--s",
        "-4",
        "--verify",
        "--tol",
        "1e-300",
    ]);
    assert_eq!(code(&out), 5);
    assert_eq!(json_matrix(&out).len(), 10);
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAILED"));
}

#[test]
fn tolerance_from_environment() {
    let fx = Fixture::new();
    let p = fx.params("real10.json", REAL10);
    let p = p.to_str().unwrap();
    let run = |tol: &str, extra: &[&str]| {
        let mut args = vec!["power", "--params", p, "--s", "-4", "--verify"];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_penta"))
            .args(&args)
            .env("PENTA_TOL", tol)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("1e-300", &[])), 5);
    assert_eq!(code(&run("1e-6", &[])), 0);
    // An explicit flag wins over the environment.
    assert_eq!(code(&run("1e-300", &["--tol", "1e-6"])), 0);
}
