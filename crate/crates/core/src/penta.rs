//! Parameters and construction of the pentadiagonal 2-Toeplitz matrix `K_n`.
//!
//! `K_n` carries `a1, a2, a1, ...` on the main diagonal, `b1, b2, ...` on the
//! second superdiagonal and `c1, c2, ...` on the second subdiagonal. Every
//! other entry is zero.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// The six generators and the order of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentaParams {
    pub a1: ComplexScalar,
    pub a2: ComplexScalar,
    pub b1: ComplexScalar,
    pub b2: ComplexScalar,
    pub c1: ComplexScalar,
    pub c2: ComplexScalar,
    pub n: usize,
}

impl PentaParams {
    pub fn new(
        a1: ComplexScalar,
        a2: ComplexScalar,
        b1: ComplexScalar,
        b2: ComplexScalar,
        c1: ComplexScalar,
        c2: ComplexScalar,
        n: usize,
    ) -> Self {
        Self {
            a1,
            a2,
            b1,
            b2,
            c1,
            c2,
            n,
        }
    }

    /// Real-valued generators, handy for tests and examples.
    pub fn real(a1: f64, a2: f64, b1: f64, b2: f64, c1: f64, c2: f64, n: usize) -> Self {
        let r = |v: f64| ComplexScalar::new(v, 0.0);
        Self::new(r(a1), r(a2), r(b1), r(b2), r(c1), r(c2), n)
    }

    pub fn with_order(self, n: usize) -> Self {
        Self { n, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        validate_params(self)
    }

    /// Generators of the tridiagonal Toeplitz block acting on odd (1-based)
    /// indices.
    pub fn odd_family(&self) -> (ComplexScalar, ComplexScalar, ComplexScalar) {
        (self.a1, self.b1, self.c1)
    }

    /// Generators of the block acting on even (1-based) indices.
    pub fn even_family(&self) -> (ComplexScalar, ComplexScalar, ComplexScalar) {
        (self.a2, self.b2, self.c2)
    }

    pub(crate) fn require_even(&self) -> Result<()> {
        validate_params(self)?;
        if !self.n.is_multiple_of(2) {
            return Err(Error::UnsupportedOddOrder { n: self.n });
        }
        Ok(())
    }

    fn named(&self) -> [(&'static str, ComplexScalar); 6] {
        [
            ("a1", self.a1),
            ("a2", self.a2),
            ("b1", self.b1),
            ("b2", self.b2),
            ("c1", self.c1),
            ("c2", self.c2),
        ]
    }
}

pub fn validate_params(p: &PentaParams) -> Result<()> {
    for (name, v) in p.named() {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFinite { name });
        }
    }
    for (name, v) in &p.named()[2..] {
        if v.re == 0.0 && v.im == 0.0 {
            return Err(Error::ZeroBandParameter { name });
        }
    }
    if p.n < 2 {
        return Err(Error::BadOrder { n: p.n });
    }
    Ok(())
}

/// Dense `K_n` with the exact pentadiagonal 2-Toeplitz zero pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaMatrix(DenseMatrix);

impl PentaMatrix {
    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix {
        self.0
    }
}

impl std::ops::Index<(usize, usize)> for PentaMatrix {
    type Output = ComplexScalar;

    fn index(&self, idx: (usize, usize)) -> &ComplexScalar {
        &self.0[idx]
    }
}

/// Builds `K_n` for either parity of `n`.
pub fn build_matrix(p: &PentaParams) -> Result<PentaMatrix> {
    validate_params(p)?;
    let n = p.n;
    let mut m = DenseMatrix::zeros(n);
    // 0-based index i is odd in the 1-based convention when i % 2 == 0.
    for i in 0..n {
        let (a, b, c) = if i % 2 == 0 {
            p.odd_family()
        } else {
            p.even_family()
        };
        m[(i, i)] = a;
        if i + 2 < n {
            m[(i, i + 2)] = b;
            m[(i + 2, i)] = c;
        }
    }
    Ok(PentaMatrix(m))
}

/// The 0-based odd-even permutation: positions `0, 2, 4, ...` followed by
/// `1, 3, 5, ...`.
pub fn odd_even_permutation(n: usize) -> Vec<usize> {
    (0..n).step_by(2).chain((1..n).step_by(2)).collect()
}

/// Returns `P M P^T` for the odd-even permutation `P`.
pub fn permute_odd_even(m: &DenseMatrix) -> DenseMatrix {
    let perm = odd_even_permutation(m.order());
    DenseMatrix::from_fn(m.order(), |i, j| m[(perm[i], perm[j])])
}

/// Tridiagonal Toeplitz matrix with `a` on the diagonal, `b` above and `c`
/// below.
pub fn tridiagonal_toeplitz(
    order: usize,
    a: ComplexScalar,
    b: ComplexScalar,
    c: ComplexScalar,
) -> DenseMatrix {
    DenseMatrix::from_fn(order, |i, j| {
        if i == j {
            a
        } else if j == i + 1 {
            b
        } else if i == j + 1 {
            c
        } else {
            ComplexScalar::new(0.0, 0.0)
        }
    })
}
