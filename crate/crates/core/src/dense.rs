//! Row-major dense complex square matrix storage.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::ComplexScalar;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<ComplexScalar>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![ComplexScalar::new(0.0, 0.0); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = ComplexScalar::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from a row-major entry vector of length `order * order`.
    pub fn from_row_major(order: usize, entries: Vec<ComplexScalar>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch {
                left: order * order,
                right: entries.len(),
            });
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ComplexScalar>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    left: order,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { order, entries })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> ComplexScalar) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn entries(&self) -> &[ComplexScalar] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn row(&self, i: usize) -> &[ComplexScalar] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_order(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest entry-wise deviation from `reference`, scaled by the largest
    /// reference entry (or 1 if the reference is smaller than that).
    pub fn max_relative_diff(&self, reference: &Self) -> Result<f64> {
        let diff = self.max_abs_diff(reference)?;
        Ok(diff / reference.max_abs().max(1.0))
    }

    pub(crate) fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::DimensionMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = ComplexScalar;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.entries[i * self.order + j]
    }
}
