//! Closed-form spectrum, eigenvectors, transform pair and characteristic
//! polynomial of an even-order `K_n`.
//!
//! Under the odd-even permutation `K_n` splits into two tridiagonal Toeplitz
//! blocks of order `n/2`, so its eigenvalues are the Chebyshev nodes of each
//! block:
//!
//! ```text
//! alpha_k = a1 - 2 sqrt(b1 c1) cos((k+1) pi / (n+2))   (k odd)
//! alpha_k = a2 - 2 sqrt(b2 c2) cos(k pi / (n+2))       (k even)
//! ```
//!
//! Indices are 1-based and interleaved, never sorted.

use std::f64::consts::PI;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::penta::PentaParams;
use crate::poly_seq::{a_values, b_values, chebyshev_u};
use crate::ComplexScalar;

/// Relative separation below which two eigenvalues count as coincident.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Principal square root with the argument in `(-pi/2, pi/2]`. A negative
/// zero imaginary part is treated as positive so the negative real axis maps
/// to the positive imaginary axis.
pub fn principal_sqrt(z: ComplexScalar) -> ComplexScalar {
    ComplexScalar::new(z.re, z.im + 0.0).sqrt()
}

/// Eigenvalues `alpha_1..alpha_n`, weights `q_1..q_n` and the ratios
/// `r1 = sqrt(b1/c1)`, `r2 = sqrt(b2/c2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<ComplexScalar>,
    weights: Vec<ComplexScalar>,
    r1: ComplexScalar,
    r2: ComplexScalar,
    root1: ComplexScalar,
    root2: ComplexScalar,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalues(&self) -> &[ComplexScalar] {
        &self.eigenvalues
    }

    pub fn weights(&self) -> &[ComplexScalar] {
        &self.weights
    }

    /// `alpha_k`, 1-based.
    pub fn alpha(&self, k: usize) -> ComplexScalar {
        self.eigenvalues[k - 1]
    }

    /// `q_k`, 1-based.
    pub fn weight(&self, k: usize) -> ComplexScalar {
        self.weights[k - 1]
    }

    pub fn r1(&self) -> ComplexScalar {
        self.r1
    }

    pub fn r2(&self) -> ComplexScalar {
        self.r2
    }

    /// `sqrt(b1 c1)` as used for the odd-indexed eigenvalues.
    pub fn root1(&self) -> ComplexScalar {
        self.root1
    }

    /// `sqrt(b2 c2)` as used for the even-indexed eigenvalues.
    pub fn root2(&self) -> ComplexScalar {
        self.root2
    }

    /// Ratio used in row `k` of the inverse transform.
    pub(crate) fn ratio_for(&self, k: usize) -> ComplexScalar {
        if k % 2 == 1 {
            self.r1
        } else {
            self.r2
        }
    }

    fn check_order(&self, p: &PentaParams) -> Result<()> {
        if self.len() != p.n {
            return Err(Error::DimensionMismatch {
                left: p.n,
                right: self.len(),
            });
        }
        Ok(())
    }
}

/// 1-based index of the closest pair of eigenvalues and their distance.
fn closest_pair(alphas: &[ComplexScalar]) -> Option<(usize, usize, f64)> {
    let mut best: Option<(usize, usize, f64)> = None;
    for i in 0..alphas.len() {
        for j in i + 1..alphas.len() {
            let gap = (alphas[i] - alphas[j]).norm();
            if best.is_none_or(|(_, _, g)| gap < g) {
                best = Some((i + 1, j + 1, gap));
            }
        }
    }
    best
}

/// Closed-form spectrum of an even-order `K_n`. Refuses spectra whose
/// eigenvalues are not simple.
pub fn eigenvalues(p: &PentaParams) -> Result<Spectrum> {
    p.require_even()?;
    let n = p.n;
    let denom = (n + 2) as f64;
    let root1 = principal_sqrt(p.b1 * p.c1);
    let root2 = principal_sqrt(p.b2 * p.c2);

    let mut eigenvalues = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for k in 1..=n {
        let (a, root, angle) = if k % 2 == 1 {
            (p.a1, root1, (k + 1) as f64 * PI / denom)
        } else {
            (p.a2, root2, k as f64 * PI / denom)
        };
        let alpha = a - root * (2.0 * angle.cos());
        let t = (alpha - a) / root;
        eigenvalues.push(alpha);
        weights.push((ComplexScalar::new(4.0, 0.0) - t * t) / denom);
    }

    let scale = eigenvalues.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if let Some((i, j, gap)) = closest_pair(&eigenvalues) {
        if gap < DEGENERACY_THRESHOLD * scale {
            return Err(Error::DegenerateSpectrum { i, j, gap });
        }
    }

    Ok(Spectrum {
        eigenvalues,
        weights,
        r1: principal_sqrt(p.b1 / p.c1),
        r2: principal_sqrt(p.b2 / p.c2),
        root1,
        root2,
    })
}

/// Unnormalised eigenvector for `alpha_j` (1-based): `B_0..B_{n-1}` at
/// `alpha_j` for odd `j`, `A_0..A_{n-1}` for even `j`.
pub fn eigenvector(p: &PentaParams, spec: &Spectrum, j: usize) -> Result<Vec<ComplexScalar>> {
    p.require_even()?;
    spec.check_order(p)?;
    if j == 0 || j > p.n {
        return Err(Error::IndexOutOfRange { index: j, n: p.n });
    }
    Ok(column_values(p, spec.alpha(j), j))
}

pub(crate) fn column_values(p: &PentaParams, alpha: ComplexScalar, j: usize) -> Vec<ComplexScalar> {
    if j % 2 == 1 {
        b_values(p, alpha, p.n - 1)
    } else {
        a_values(p, alpha, p.n - 1)
    }
}

/// Exponent of `r` attached to 1-based column `j` of the inverse transform.
pub(crate) fn ratio_exponent(j: usize) -> u32 {
    if j % 2 == 1 {
        (j - 1) as u32
    } else {
        (j - 2) as u32
    }
}

/// The eigenvector matrix `L_n` and its closed-form inverse.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformPair {
    pub l_matrix: DenseMatrix,
    pub l_inverse: DenseMatrix,
}

pub fn build_transform(p: &PentaParams, spec: &Spectrum) -> Result<TransformPair> {
    p.require_even()?;
    spec.check_order(p)?;
    let n = p.n;
    let columns: Vec<Vec<ComplexScalar>> = (1..=n)
        .map(|k| column_values(p, spec.alpha(k), k))
        .collect();
    let l_matrix = DenseMatrix::from_fn(n, |i, k| columns[k][i]);
    // Row k of the inverse reuses the k-th eigenvector, weighted by q_k and
    // powers of r1 or r2.
    let l_inverse = DenseMatrix::from_fn(n, |k, j| {
        let r = spec.ratio_for(k + 1);
        spec.weight(k + 1) * r.powu(ratio_exponent(j + 1)) * columns[k][j]
    });
    Ok(TransformPair {
        l_matrix,
        l_inverse,
    })
}

/// `det(x I - K_n)` as a product of two scaled Chebyshev polynomials of
/// order `n/2`, one per block.
pub fn char_poly_eval(p: &PentaParams, x: ComplexScalar) -> Result<ComplexScalar> {
    p.require_even()?;
    let half = p.n / 2;
    let block = |a: ComplexScalar, b: ComplexScalar, c: ComplexScalar| {
        let root = principal_sqrt(b * c);
        root.powu(half as u32) * chebyshev_u(half, (x - a) / (root * 2.0))
    };
    Ok(block(p.a1, p.b1, p.c1) * block(p.a2, p.b2, p.c2))
}

/// `det(x I - K_n)` as `(b1 b2)^(n/2) A_{n+1}(x) B_n(x)`.
pub fn char_poly_eval_sequences(p: &PentaParams, x: ComplexScalar) -> Result<ComplexScalar> {
    p.require_even()?;
    let n = p.n;
    let a = a_values(p, x, n + 1);
    let b = b_values(p, x, n);
    Ok((p.b1 * p.b2).powu((n / 2) as u32) * a[n + 1] * b[n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penta::build_matrix;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn real10() -> PentaParams {
        PentaParams::real(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 10)
    }

    #[test]
    fn odd_order_rejected() {
        let p = real10().with_order(7);
        assert_eq!(eigenvalues(&p), Err(Error::UnsupportedOddOrder { n: 7 }));
        assert_eq!(
            char_poly_eval(&p, c(0.0, 0.0)),
            Err(Error::UnsupportedOddOrder { n: 7 })
        );
    }

    #[test]
    fn order_six_closed_forms() {
        let p = PentaParams::new(
            c(1.0, 0.2),
            c(-0.3, 1.0),
            c(3.0, 0.0),
            c(2.0, -1.0),
            c(5.0, 0.0),
            c(0.5, 0.5),
            6,
        );
        let spec = eigenvalues(&p).unwrap();
        let s1 = principal_sqrt(p.b1 * p.c1 * 2.0);
        let s2 = principal_sqrt(p.b2 * p.c2 * 2.0);
        let expected = [p.a1 - s1, p.a2 - s2, p.a1, p.a2, p.a1 + s1, p.a2 + s2];
        for (k, e) in expected.iter().enumerate() {
            assert!(
                (spec.eigenvalues()[k] - e).norm() < 1e-13,
                "alpha_{}",
                k + 1
            );
        }
        // (alpha_1 - a1)/sqrt(b1 c1) = -sqrt(2), so q_1 = (4 - 2)/8.
        assert!((spec.weight(1) - c(0.25, 0.0)).norm() < 1e-15);
        assert!((spec.weight(3) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn real_order10_reference_spectrum() {
        let spec = eigenvalues(&real10()).unwrap();
        let printed = [
            -5.7082, -6.4853, -2.8730, -2.8990, 1.0, 2.0, 4.8730, 6.8990, 7.7082, 10.4853,
        ];
        for (k, v) in printed.iter().enumerate() {
            let alpha = spec.eigenvalues()[k];
            assert!((alpha.re - v).abs() <= 5e-5, "alpha_{}", k + 1);
            assert_eq!(alpha.im, 0.0);
        }
    }

    #[test]
    fn complex_order8_second_eigenvalue() {
        let p = PentaParams::new(
            c(1.0, 0.0),
            c(1.0, 1.0),
            c(3.0, 0.0),
            c(3.0, 1.0),
            c(5.0, 0.0),
            c(5.0, 1.0),
            8,
        );
        let spec = eigenvalues(&p).unwrap();
        assert!((spec.alpha(2) - c(-5.280, -0.668)).norm() < 1e-3);
    }

    #[test]
    fn coincident_families_are_degenerate() {
        let p = PentaParams::real(1.0, 1.0, 3.0, 5.0, 5.0, 3.0, 6);
        match eigenvalues(&p) {
            Err(Error::DegenerateSpectrum { i, j, gap }) => {
                assert_eq!((i, j), (1, 2));
                assert!(gap < 1e-12);
            }
            other => panic!("expected degeneracy, got {other:?}"),
        }
    }

    #[test]
    fn eigenvector_initial_entries() {
        let p = real10();
        let spec = eigenvalues(&p).unwrap();
        let v1 = eigenvector(&p, &spec, 1).unwrap();
        assert_eq!(v1[0], c(1.0, 0.0));
        let v2 = eigenvector(&p, &spec, 2).unwrap();
        assert_eq!(v2[0], c(0.0, 0.0));
        assert_eq!(v2[1], c(1.0, 0.0));
        assert_eq!(
            eigenvector(&p, &spec, 11),
            Err(Error::IndexOutOfRange { index: 11, n: 10 })
        );
        assert_eq!(
            eigenvector(&p, &spec, 0),
            Err(Error::IndexOutOfRange { index: 0, n: 10 })
        );
    }

    #[test]
    fn order_six_first_eigenpair_residual() {
        let p = PentaParams::real(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 6);
        let spec = eigenvalues(&p).unwrap();
        let k = build_matrix(&p).unwrap();
        let v = eigenvector(&p, &spec, 1).unwrap();
        let vnorm = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for i in 0..6 {
            let kv: ComplexScalar = (0..6).map(|j| k[(i, j)] * v[j]).sum();
            assert!((kv - spec.alpha(1) * v[i]).norm() <= 1e-9 * vnorm);
        }
    }

    #[test]
    fn inverse_first_row_layout() {
        let p = real10();
        let spec = eigenvalues(&p).unwrap();
        let t = build_transform(&p, &spec).unwrap();
        let b = crate::poly_seq::b_values(&p, spec.alpha(1), 3);
        let q = spec.weight(1);
        let r2 = spec.r1() * spec.r1();
        let expected = [q * b[0], q * b[1], q * r2 * b[2], q * r2 * b[3]];
        for (j, e) in expected.iter().enumerate() {
            assert!((t.l_inverse[(0, j)] - e).norm() < 1e-15 * e.norm().max(1.0));
        }
    }

    #[test]
    fn spectrum_order_mismatch() {
        let spec = eigenvalues(&real10()).unwrap();
        let p = real10().with_order(8);
        assert_eq!(
            build_transform(&p, &spec),
            Err(Error::DimensionMismatch { left: 8, right: 10 })
        );
    }

    #[test]
    fn principal_sqrt_branch() {
        assert_eq!(principal_sqrt(c(-4.0, -0.0)), c(0.0, 2.0));
        let r = principal_sqrt(c(-3.0, -1e-300));
        assert!(r.re >= 0.0 && r.im < 0.0);
    }
}
