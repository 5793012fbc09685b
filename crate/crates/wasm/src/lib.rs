//! Browser bindings for the pentadiagonal power engine.
//!
//! Parameters cross the boundary as a flat `[f64; 12]`:
//! `a1.re, a1.im, a2.re, a2.im, b1.re, b1.im, b2.re, b2.im, c1.re, c1.im, c2.re, c2.im`.
//! Every export returns a JSON string; failures become a JS exception carrying
//! the error message.

use penta_core::oracle::{dense_inverse, dense_power};
use penta_core::{
    build_matrix, char_poly_eval, eigenvalues, ComplexScalar, DenseMatrix, PentaParams, PowerEngine,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the demo accepts; the dense cross-check is cubic.
pub const MAX_ORDER: usize = 64;

/// Largest grid the landscape accepts along each side.
pub const MAX_GRID: usize = 400;

fn pair(z: ComplexScalar) -> Value {
    json!([z.re, z.im])
}

pub fn params_from_slice(values: &[f64], n: usize) -> Result<PentaParams, String> {
    if values.len() != 12 {
        return Err(format!(
            "expected 12 parameter values, got {}",
            values.len()
        ));
    }
    if n > MAX_ORDER {
        return Err(format!("order {n} exceeds the demo limit of {MAX_ORDER}"));
    }
    let z = |k: usize| ComplexScalar::new(values[2 * k], values[2 * k + 1]);
    let p = PentaParams::new(z(0), z(1), z(2), z(3), z(4), z(5), n);
    p.validate().map_err(|e| e.to_string())?;
    Ok(p)
}

pub fn spectrum_json(values: &[f64], n: usize) -> Result<String, String> {
    let p = params_from_slice(values, n)?;
    let spec = eigenvalues(&p).map_err(|e| e.to_string())?;
    let doc = json!({
        "n": n,
        "eigenvalues": spec.eigenvalues().iter().map(|&z| pair(z)).collect::<Vec<_>>(),
        "weights": spec.weights().iter().map(|&z| pair(z)).collect::<Vec<_>>(),
        "r1": pair(spec.r1()),
        "r2": pair(spec.r2()),
    });
    Ok(doc.to_string())
}

fn oracle_power(k: &DenseMatrix, s: i64) -> Result<DenseMatrix, String> {
    let e = u32::try_from(s.unsigned_abs()).map_err(|_| format!("exponent {s} out of range"))?;
    let base = if s < 0 {
        dense_inverse(k).map_err(|e| e.to_string())?.inverse
    } else {
        k.clone()
    };
    dense_power(&base, e).map_err(|e| e.to_string())
}

/// `W(s) = K^s` as row-major `[re, im]` entries, plus the relative deviation
/// from repeated dense multiplication.
pub fn power_json(values: &[f64], n: usize, s: i64) -> Result<String, String> {
    let p = params_from_slice(values, n)?;
    let engine = PowerEngine::new(&p).map_err(|e| e.to_string())?;
    let w = engine.matrix(s).map_err(|e| e.to_string())?.matrix;
    let k = build_matrix(&p).map_err(|e| e.to_string())?;
    let reference = oracle_power(k.as_dense(), s)?;
    let deviation = w.max_relative_diff(&reference).map_err(|e| e.to_string())?;
    let doc = json!({
        "n": n,
        "s": s,
        "entries": w.entries().iter().map(|&z| pair(z)).collect::<Vec<_>>(),
        "max_abs": w.max_abs(),
        "oracle_deviation": deviation,
    });
    Ok(doc.to_string())
}

/// `log10 |det(xI - K)|` sampled on a `width x height` grid, row 0 at `im_max`.
/// Exact zeros come back as `null`.
#[allow(clippy::too_many_arguments)]
pub fn landscape_json(
    values: &[f64],
    n: usize,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    width: usize,
    height: usize,
) -> Result<String, String> {
    let p = params_from_slice(values, n)?;
    if !(2..=MAX_GRID).contains(&width) || !(2..=MAX_GRID).contains(&height) {
        return Err(format!("grid sides must be between 2 and {MAX_GRID}"));
    }
    if !(re_min < re_max && im_min < im_max) {
        return Err("empty sampling window".to_string());
    }
    let mut samples = Vec::with_capacity(width * height);
    for row in 0..height {
        let im = im_max - (im_max - im_min) * row as f64 / (height - 1) as f64;
        for col in 0..width {
            let re = re_min + (re_max - re_min) * col as f64 / (width - 1) as f64;
            let v = char_poly_eval(&p, ComplexScalar::new(re, im)).map_err(|e| e.to_string())?;
            samples.push(v.norm().log10());
        }
    }
    let doc = json!({
        "width": width,
        "height": height,
        "window": [re_min, re_max, im_min, im_max],
        "log_modulus": samples,
    });
    Ok(doc.to_string())
}

#[wasm_bindgen]
pub fn spectrum(params: &[f64], n: usize) -> Result<String, JsValue> {
    spectrum_json(params, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn power(params: &[f64], n: usize, s: i32) -> Result<String, JsValue> {
    power_json(params, n, s.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn landscape(
    params: &[f64],
    n: usize,
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
    width: usize,
    height: usize,
) -> Result<String, JsValue> {
    landscape_json(params, n, re_min, re_max, im_min, im_max, width, height)
        .map_err(|e| JsValue::from_str(&e))
}
