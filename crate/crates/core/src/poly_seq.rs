//! The polynomial sequences `{A_i}` and `{B_i}` attached to `K_n`.
//!
//! Both sequences obey the same interleaved recurrence; they differ only in
//! their initial conditions (`A_0 = 0, A_1 = 1` and `B_0 = 1, B_1 = 0`). An
//! even index `k` steps with the first family and an odd index with the
//! second:
//!
//! ```text
//! b1 V_k = (x - a1) V_{k-2} - c1 V_{k-4}    (k even)
//! b2 V_k = (x - a2) V_{k-2} - c2 V_{k-4}    (k odd)
//! ```
//!
//! with the `c` term absent for `k < 4`. The even and odd subsequences never
//! interact, so `A_{2i}` and `B_{2i+1}` are identically zero.

use crate::error::Result;
use crate::penta::{validate_params, PentaParams};
use crate::ComplexScalar;

const ZERO: ComplexScalar = ComplexScalar::new(0.0, 0.0);
const ONE: ComplexScalar = ComplexScalar::new(1.0, 0.0);

/// `A_0(x)..A_m(x)` and `B_0(x)..B_m(x)` at a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct SeqEvaluation {
    pub point: ComplexScalar,
    pub a_values: Vec<ComplexScalar>,
    pub b_values: Vec<ComplexScalar>,
}

fn step_generators(p: &PentaParams, k: usize) -> (ComplexScalar, ComplexScalar, ComplexScalar) {
    if k.is_multiple_of(2) {
        p.odd_family()
    } else {
        p.even_family()
    }
}

/// Runs the recurrence forward in place, given `values[0]` and `values[1]`.
fn run_recurrence(p: &PentaParams, x: ComplexScalar, values: &mut [ComplexScalar]) {
    for k in 2..values.len() {
        let (a, b, c) = step_generators(p, k);
        let mut acc = (x - a) * values[k - 2];
        if k >= 4 {
            acc -= c * values[k - 4];
        }
        values[k] = acc / b;
    }
}

/// Evaluates one sequence up to index `m` from the given initial conditions.
pub(crate) fn sequence_values(
    p: &PentaParams,
    x: ComplexScalar,
    m: usize,
    init: [ComplexScalar; 2],
) -> Vec<ComplexScalar> {
    let mut values = vec![ZERO; m.max(1) + 1];
    values[0] = init[0];
    values[1] = init[1];
    run_recurrence(p, x, &mut values);
    values.truncate(m + 1);
    values
}

pub(crate) fn a_values(p: &PentaParams, x: ComplexScalar, m: usize) -> Vec<ComplexScalar> {
    sequence_values(p, x, m, [ZERO, ONE])
}

pub(crate) fn b_values(p: &PentaParams, x: ComplexScalar, m: usize) -> Vec<ComplexScalar> {
    sequence_values(p, x, m, [ONE, ZERO])
}

/// `A_0..A_m` and `B_0..B_m` at `x`. For `m = 0` only the index-0 values are
/// returned.
pub fn eval_sequences(p: &PentaParams, x: ComplexScalar, m: usize) -> Result<SeqEvaluation> {
    validate_params(p)?;
    check_finite(x)?;
    Ok(SeqEvaluation {
        point: x,
        a_values: a_values(p, x, m),
        b_values: b_values(p, x, m),
    })
}

fn check_finite(x: ComplexScalar) -> Result<()> {
    if x.re.is_finite() && x.im.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::NonFinite { name: "x" })
    }
}

/// `P_i(x) = A_n(x) B_i(x) - A_i(x) B_n(x)` where `n` is the order in `p`.
pub fn eval_p(p: &PentaParams, x: ComplexScalar, i: usize) -> Result<ComplexScalar> {
    let seq = eval_sequences(p, x, i.max(p.n))?;
    let (a, b) = (&seq.a_values, &seq.b_values);
    Ok(a[p.n] * b[i] - a[i] * b[p.n])
}

/// Chebyshev polynomial of the second kind, `U_m(x)`, by the three-term
/// recurrence. Valid for complex arguments.
pub fn chebyshev_u(m: usize, x: ComplexScalar) -> ComplexScalar {
    let two_x = x * 2.0;
    let (mut prev, mut cur) = (ONE, two_x);
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = two_x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Polynomial coefficients in ascending degree order. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients and
/// the last stored entry is the leading coefficient.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PolyCoefficients {
    coeffs: Vec<ComplexScalar>,
}

impl PolyCoefficients {
    pub fn new(mut coeffs: Vec<ComplexScalar>) -> Self {
        while coeffs.last().is_some_and(|c| *c == ZERO) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: ComplexScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<ComplexScalar> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: ComplexScalar) -> ComplexScalar {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, s: ComplexScalar) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[ComplexScalar], k: usize| v.get(k).copied().unwrap_or(ZERO);
        Self::new(
            (0..len)
                .map(|k| get(&self.coeffs, k) + get(&other.coeffs, k))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-ONE))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            for (j, &y) in other.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::new(out)
    }
}

/// Coefficient arrays of `A_0..A_m` and `B_0..B_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequences {
    pub a: Vec<PolyCoefficients>,
    pub b: Vec<PolyCoefficients>,
}

fn coefficient_run(p: &PentaParams, m: usize, init: [ComplexScalar; 2]) -> Vec<PolyCoefficients> {
    let mut polys = vec![
        PolyCoefficients::constant(init[0]),
        PolyCoefficients::constant(init[1]),
    ];
    for k in 2..=m.max(1) {
        let (a, b, c) = step_generators(p, k);
        let prev = &polys[k - 2];
        let mut acc = prev.shift().sub(&prev.scale(a));
        if k >= 4 {
            acc = acc.sub(&polys[k - 4].scale(c));
        }
        polys.push(acc.scale(ONE / b));
    }
    polys.truncate(m + 1);
    polys
}

/// The same recurrences carried out on coefficient vectors.
pub fn coefficient_sequences(p: &PentaParams, m: usize) -> Result<CoefficientSequences> {
    validate_params(p)?;
    Ok(CoefficientSequences {
        a: coefficient_run(p, m, [ZERO, ONE]),
        b: coefficient_run(p, m, [ONE, ZERO]),
    })
}

/// Coefficients of `P_i = A_n B_i - A_i B_n`.
pub fn p_coefficients(p: &PentaParams, i: usize) -> Result<PolyCoefficients> {
    let seqs = coefficient_sequences(p, i.max(p.n))?;
    let n = p.n;
    Ok(seqs.a[n].mul(&seqs.b[i]).sub(&seqs.a[i].mul(&seqs.b[n])))
}
