//! Reference dense linear algebra used to cross-check the closed forms.
//!
//! Nothing here depends on the spectral or power modules.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// Pivot modulus, relative to the infinity norm, below which a matrix is
/// treated as singular by [`dense_inverse`].
pub const PIVOT_THRESHOLD: f64 = 1e-13;

const ZERO: ComplexScalar = ComplexScalar::new(0.0, 0.0);
const ONE: ComplexScalar = ComplexScalar::new(1.0, 0.0);

pub fn dense_multiply(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    a.check_same_order(b)?;
    let n = a.order();
    let mut out = DenseMatrix::zeros(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a[(i, k)];
            if aik == ZERO {
                continue;
            }
            for j in 0..n {
                out[(i, j)] += aik * b[(k, j)];
            }
        }
    }
    Ok(out)
}

/// `m^s` by repeated squaring, `m^0 = I`.
pub fn dense_power(m: &DenseMatrix, s: u32) -> Result<DenseMatrix> {
    let mut acc = DenseMatrix::identity(m.order());
    let mut sq = m.clone();
    let mut e = s;
    while e > 0 {
        if e & 1 == 1 {
            acc = dense_multiply(&acc, &sq)?;
        }
        e >>= 1;
        if e > 0 {
            sq = dense_multiply(&sq, &sq)?;
        }
    }
    Ok(acc)
}

/// Inverse and its residual `||M M^{-1} - I||_inf`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseInverse {
    pub inverse: DenseMatrix,
    pub residual: f64,
}

/// Row at or below `col` with the largest modulus in column `col`.
fn find_pivot(m: &DenseMatrix, col: usize) -> (usize, f64) {
    (col..m.order())
        .map(|r| (r, m[(r, col)].norm()))
        .fold(
            (col, -1.0),
            |best, cand| if cand.1 > best.1 { cand } else { best },
        )
}

fn swap_rows(m: &mut DenseMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.order() {
        let t = m[(a, j)];
        m[(a, j)] = m[(b, j)];
        m[(b, j)] = t;
    }
}

/// Gauss-Jordan elimination with partial pivoting on the complex modulus.
pub fn dense_inverse(m: &DenseMatrix) -> Result<DenseInverse> {
    let n = m.order();
    let threshold = PIVOT_THRESHOLD * m.norm_inf();
    let mut work = m.clone();
    let mut inv = DenseMatrix::identity(n);
    for col in 0..n {
        let (piv, modulus) = find_pivot(&work, col);
        if modulus < threshold || modulus == 0.0 {
            return Err(Error::NumericallySingular {
                column: col,
                pivot: modulus,
            });
        }
        swap_rows(&mut work, col, piv);
        swap_rows(&mut inv, col, piv);
        let scale = ONE / work[(col, col)];
        for j in 0..n {
            work[(col, j)] *= scale;
            inv[(col, j)] *= scale;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = work[(r, col)];
            if f == ZERO {
                continue;
            }
            for j in 0..n {
                let wj = work[(col, j)];
                let ij = inv[(col, j)];
                work[(r, j)] -= f * wj;
                inv[(r, j)] -= f * ij;
            }
        }
    }
    let check = dense_multiply(m, &inv)?;
    let residual =
        DenseMatrix::from_fn(n, |i, j| check[(i, j)] - if i == j { ONE } else { ZERO }).norm_inf();
    Ok(DenseInverse {
        inverse: inv,
        residual,
    })
}

/// Product of the LU pivots with the sign of the row permutation. Exactly
/// singular matrices give zero.
pub fn dense_determinant(m: &DenseMatrix) -> ComplexScalar {
    let n = m.order();
    let mut work = m.clone();
    let mut det = ONE;
    for col in 0..n {
        let (piv, modulus) = find_pivot(&work, col);
        if modulus == 0.0 {
            return ZERO;
        }
        if piv != col {
            swap_rows(&mut work, col, piv);
            det = -det;
        }
        let pivot = work[(col, col)];
        det *= pivot;
        for r in col + 1..n {
            let f = work[(r, col)] / pivot;
            if f == ZERO {
                continue;
            }
            for j in col..n {
                let v = work[(col, j)];
                work[(r, j)] -= f * v;
            }
        }
    }
    det
}
