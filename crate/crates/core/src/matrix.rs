//! Dense square complex matrices, row sums, and deflation by a constant
//! row sum.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_traits::Zero;
use thiserror::Error;

use crate::Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("row sums are not constant (spread {spread:e})")]
    NonConstantRowSum { spread: f64 },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("operation needs dimension at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut data = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(MatrixError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            data.extend(r);
        }
        Ok(ComplexMatrix { n, data })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks(self.n.max(1))
    }

    /// Real parts, row by row.
    pub fn re_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(|r| r.iter().map(|z| z.re).collect()).collect()
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0.0)
    }

    pub fn is_real_symmetric(&self, tol: f64) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let (a, b) = (self[(i, j)], self[(j, i)]);
                a.im.abs() <= tol && (a.re - b.re).abs() <= tol
            })
        })
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum())
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<Complex64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Common row sum `γ` when every pair of row sums is within `tol`;
    /// returns the mean of the row sums.
    pub fn constant_row_sum(&self, tol: f64) -> Option<Complex64> {
        let sums = self.row_sums();
        (row_sum_spread(&sums) <= tol).then(|| mean(&sums))
    }

    /// Tolerance used when a caller does not supply one:
    /// `1e-9 · (1 + max |row sum|)`.
    pub fn default_row_sum_tolerance(&self) -> f64 {
        let max = self
            .row_sums()
            .iter()
            .map(|s| s.norm())
            .fold(0.0, f64::max);
        1e-9 * (1.0 + max)
    }

    /// `γ` under the default tolerance, or the spread that ruled it out.
    pub fn require_constant_row_sum(&self) -> Result<Complex64, MatrixError> {
        let sums = self.row_sums();
        let spread = row_sum_spread(&sums);
        if spread <= self.default_row_sum_tolerance() {
            Ok(mean(&sums))
        } else {
            Err(MatrixError::NonConstantRowSum { spread })
        }
    }

    /// The `(n-1)`-dimensional matrix `A(k|k) - e·a(k)` (1-based `k`): the
    /// principal submatrix with the `k`-deleted row of `A` subtracted from
    /// every row. Its spectrum is that of `A` with one copy of `γ` removed.
    pub fn deflate(&self, k: usize) -> Result<ComplexMatrix, MatrixError> {
        if self.n < 2 {
            return Err(MatrixError::TooSmall { n: self.n, min: 2 });
        }
        if k == 0 || k > self.n {
            return Err(MatrixError::IndexOutOfRange {
                index: k,
                n: self.n,
            });
        }
        self.require_constant_row_sum()?;
        Ok(self.deflate_unchecked(k - 1))
    }

    /// Deflation at 0-based `k` without the row-sum check.
    pub(crate) fn deflate_unchecked(&self, k: usize) -> ComplexMatrix {
        let n = self.n;
        let keep: Vec<usize> = (0..n).filter(|&v| v != k).collect();
        let mut out = Self::zeros(n - 1);
        for (r, &u) in keep.iter().enumerate() {
            for (c, &v) in keep.iter().enumerate() {
                out.data[r * (n - 1) + c] = self[(u, v)] - self[(k, v)];
            }
        }
        out
    }

    /// `P^T A P` for the permutation that sends position `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ComplexMatrix {
        assert_eq!(perm.len(), self.n);
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(perm[i], perm[j])];
            }
        }
        out
    }
}

fn row_sum_spread(sums: &[Complex64]) -> f64 {
    let mut spread: f64 = 0.0;
    for (i, a) in sums.iter().enumerate() {
        for b in &sums[i + 1..] {
            spread = spread.max((a - b).norm());
        }
    }
    spread
}

fn mean(values: &[Complex64]) -> Complex64 {
    values.iter().sum::<Complex64>() / values.len() as f64
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.n + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.n + c]
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// The 3×3 matrix with every row summing to `2 + 2i`.
    pub fn worked_example() -> ComplexMatrix {
        ComplexMatrix::from_rows(vec![
            vec![c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)],
            vec![c(0.0, 1.0), c(2.0, 1.0), c(0.0, 0.0)],
            vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, 1.0)],
        ])
        .unwrap()
    }
}
