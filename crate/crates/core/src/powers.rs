//! Entry-wise closed form for `W(s) = K_n^s`, `s` any integer.
//!
//! `w_ij(s)` vanishes when `i + j` is odd. Otherwise, for odd `j`,
//!
//! ```text
//! w_ij(s) = sum_{z=1}^{n/2} q_{2z-1} r1^l alpha_{2z-1}^s B_{i-1}(alpha_{2z-1}) B_{j-1}(alpha_{2z-1})
//! ```
//!
//! and for even `j` the same sum over even-indexed eigenvalues with `q_{2z}`,
//! `r2` and the `A` sequence. Here `l = j - 1` for odd `j` and `l = j - 2`
//! for even `j`.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::penta::PentaParams;
use crate::spectral::{column_values, eigenvalues, ratio_exponent, Spectrum};
use crate::ComplexScalar;

/// Relative modulus below which an eigenvalue counts as zero.
pub const SINGULARITY_THRESHOLD: f64 = 1e-12;

const ZERO: ComplexScalar = ComplexScalar::new(0.0, 0.0);
const ONE: ComplexScalar = ComplexScalar::new(1.0, 0.0);

/// `W(s)` together with the spectrum it was assembled from.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerResult {
    pub exponent: i64,
    pub matrix: DenseMatrix,
    pub spectrum_used: Spectrum,
}

/// Outcome of the zero-eigenvalue check.
#[derive(Debug, Clone, PartialEq)]
pub struct Invertibility {
    pub invertible: bool,
    /// 1-based indices `k` with `alpha_k` numerically zero.
    pub offending: Vec<usize>,
    pub min_modulus: f64,
}

fn zero_eigenvalues(spec: &Spectrum) -> Vec<usize> {
    let alphas = spec.eigenvalues();
    let scale = alphas.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let threshold = SINGULARITY_THRESHOLD * scale;
    alphas
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() <= threshold)
        .map(|(k, _)| k + 1)
        .collect()
}

/// `K_n` is invertible iff no closed-form eigenvalue vanishes.
pub fn check_invertible(p: &PentaParams, spec: &Spectrum) -> Invertibility {
    debug_assert_eq!(p.n, spec.len());
    let offending = zero_eigenvalues(spec);
    let min_modulus = spec
        .eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(f64::INFINITY, f64::min);
    Invertibility {
        invertible: offending.is_empty(),
        offending,
        min_modulus,
    }
}

/// `z^s` by repeated squaring; negative `s` raises `1/z`.
pub(crate) fn scalar_power(z: ComplexScalar, s: i64) -> ComplexScalar {
    let base = if s < 0 { ONE / z } else { z };
    let mut e = s.unsigned_abs();
    let (mut acc, mut sq) = (ONE, base);
    while e > 0 {
        if e & 1 == 1 {
            acc *= sq;
        }
        sq *= sq;
        e >>= 1;
    }
    acc
}

/// Precomputed eigenvector tables for repeated entry evaluation.
#[derive(Debug, Clone)]
pub struct PowerEngine {
    n: usize,
    spectrum: Spectrum,
    /// `columns[k]` holds the eigenvector of `alpha_{k+1}`.
    columns: Vec<Vec<ComplexScalar>>,
}

impl PowerEngine {
    pub fn new(p: &PentaParams) -> Result<Self> {
        let spectrum = eigenvalues(p)?;
        Self::with_spectrum(p, spectrum)
    }

    pub fn with_spectrum(p: &PentaParams, spectrum: Spectrum) -> Result<Self> {
        p.require_even()?;
        if spectrum.len() != p.n {
            return Err(Error::DimensionMismatch {
                left: p.n,
                right: spectrum.len(),
            });
        }
        let columns = (1..=p.n)
            .map(|k| column_values(p, spectrum.alpha(k), k))
            .collect();
        Ok(Self {
            n: p.n,
            spectrum,
            columns,
        })
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    fn check_exponent(&self, s: i64) -> Result<()> {
        if s < 0 {
            let offending = zero_eigenvalues(&self.spectrum);
            if !offending.is_empty() {
                return Err(Error::SingularMatrix { offending });
            }
        }
        Ok(())
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.n {
            return Err(Error::IndexOutOfRange { index, n: self.n });
        }
        Ok(())
    }

    fn powers_of_spectrum(&self, s: i64) -> Vec<ComplexScalar> {
        self.spectrum
            .eigenvalues()
            .iter()
            .map(|&z| scalar_power(z, s))
            .collect()
    }

    /// `w_ij(s)` with 1-based `i`, `j`.
    pub fn entry(&self, s: i64, i: usize, j: usize) -> Result<ComplexScalar> {
        self.check_exponent(s)?;
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.entry_with(&self.powers_of_spectrum(s), i, j))
    }

    fn entry_with(&self, alpha_pow: &[ComplexScalar], i: usize, j: usize) -> ComplexScalar {
        if (i + j) % 2 == 1 {
            return ZERO;
        }
        let r = self.spectrum.ratio_for(j);
        let rl = r.powu(ratio_exponent(j));
        // Odd j pairs with odd-indexed eigenvalues, even j with even ones.
        let first = if j % 2 == 1 { 1 } else { 2 };
        let sum: ComplexScalar = (first..=self.n)
            .step_by(2)
            .map(|k| {
                let v = &self.columns[k - 1];
                self.spectrum.weight(k) * alpha_pow[k - 1] * v[i - 1] * v[j - 1]
            })
            .sum();
        sum * rl
    }

    pub fn matrix(&self, s: i64) -> Result<PowerResult> {
        self.check_exponent(s)?;
        let alpha_pow = self.powers_of_spectrum(s);
        let matrix = DenseMatrix::from_fn(self.n, |i, j| self.entry_with(&alpha_pow, i + 1, j + 1));
        Ok(PowerResult {
            exponent: s,
            matrix,
            spectrum_used: self.spectrum.clone(),
        })
    }
}

/// Single entry `w_ij(s)`, 1-based. Builds the eigenvector tables on every
/// call; use [`PowerEngine`] for repeated access.
pub fn power_entry(
    p: &PentaParams,
    spec: &Spectrum,
    s: i64,
    i: usize,
    j: usize,
) -> Result<ComplexScalar> {
    PowerEngine::with_spectrum(p, spec.clone())?.entry(s, i, j)
}

/// Full `W(s) = K_n^s`.
pub fn matrix_power(p: &PentaParams, s: i64) -> Result<PowerResult> {
    PowerEngine::new(p)?.matrix(s)
}
