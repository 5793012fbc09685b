#![allow(dead_code)]

use std::f64::consts::TAU;

use penta_core::{eigenvalues, ComplexScalar, DenseMatrix, PentaParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> ComplexScalar {
    ComplexScalar::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Diagonal generator with both parts in [-3.5, 3.5], so |a| <= 5.
pub fn random_diagonal(rng: &mut impl Rng) -> ComplexScalar {
    c(rng.random_range(-3.5..3.5), rng.random_range(-3.5..3.5))
}

/// Band generator with modulus in [0.5, 5] and uniform argument.
pub fn random_band(rng: &mut impl Rng) -> ComplexScalar {
    ComplexScalar::from_polar(rng.random_range(0.5..5.0), rng.random_range(0.0..TAU))
}

pub fn random_params(rng: &mut impl Rng, n: usize) -> PentaParams {
    PentaParams::new(
        random_diagonal(rng),
        random_diagonal(rng),
        random_band(rng),
        random_band(rng),
        random_band(rng),
        random_band(rng),
        n,
    )
}

/// Redraws until the degeneracy gate passes.
pub fn random_simple(rng: &mut impl Rng, n: usize) -> PentaParams {
    loop {
        let p = random_params(rng, n);
        if eigenvalues(&p).is_ok() {
            return p;
        }
    }
}

pub fn complex8() -> PentaParams {
    PentaParams::new(
        c(1.0, 0.0),
        c(1.0, 1.0),
        c(3.0, 0.0),
        c(3.0, 1.0),
        c(5.0, 0.0),
        c(5.0, 1.0),
        8,
    )
}

pub fn real10() -> PentaParams {
    PentaParams::real(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 10)
}

pub fn max_abs(v: &[ComplexScalar]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn mat_vec(m: &DenseMatrix, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
    m.rows()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Relative deviation of `z` from `reference`, scaled by `|reference|`.
pub fn rel(z: ComplexScalar, reference: ComplexScalar) -> f64 {
    (z - reference).norm() / reference.norm()
}
