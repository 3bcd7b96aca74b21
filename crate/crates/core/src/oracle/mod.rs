//! Reference spectra used to check every region and bound.
//!
//! Real symmetric matrices go through cyclic Jacobi rotations. General
//! complex matrices go through their characteristic polynomial and
//! simultaneous root iteration, which is adequate at the sizes used for
//! verification (n <= 64).

mod aberth;
mod charpoly;
mod jacobi;

use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::Complex64;

pub use aberth::{polynomial_roots, RootsOutcome};
pub use charpoly::{charpoly, eval_poly, MAX_CHARPOLY_DIM};
pub use jacobi::{normalized_spectrum, symmetric_eigenvalues, MAX_SYMMETRIC_DIM};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("matrix is not real symmetric")]
    NotSymmetric,
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("dimension {n} exceeds the oracle cap of {max}")]
    DimensionCap { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Eigenvalues with multiplicity, plus an accuracy certificate.
///
/// Real spectra are sorted descending, so `values[0]` is `λ_1` and
/// `values[n - 1]` is `λ_n`. Complex spectra are sorted by real part, then
/// imaginary part, both descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<Complex64>,
    pub max_residual: f64,
}

impl Spectrum {
    pub(crate) fn real(mut values: Vec<f64>, max_residual: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values: values.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
            max_residual,
        }
    }

    pub(crate) fn complex(mut values: Vec<Complex64>, max_residual: f64) -> Self {
        values.sort_by(descending);
        Spectrum {
            values,
            max_residual,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Real parts, in stored order.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|z| z.re).collect()
    }

    /// `λ_i` with 1-based `i` under the descending order.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1].re
    }

    pub fn trace(&self) -> Complex64 {
        self.values.iter().sum()
    }
}

fn descending(a: &Complex64, b: &Complex64) -> Ordering {
    b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im))
}

/// Greedy multiset match: true when every value of `a` pairs off with a
/// distinct value of `b` within `tol`.
pub fn multiset_close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = alloc::vec![false; b.len()];
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by(|&i, &j| descending(&a[i], &a[j]));
    for i in order {
        let best = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, z)| (j, (z - a[i]).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1));
        match best {
            Some((j, d)) if d <= tol => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// Spectrum of a general complex matrix from the roots of its
/// characteristic polynomial. `tol` bounds the relative backward error
/// `|p(z)| / Σ|c_k||z|^k` of every returned root.
pub fn complex_eigenvalues(
    m: &crate::matrix::ComplexMatrix,
    tol: f64,
) -> Result<Spectrum, OracleError> {
    let p = charpoly(m)?;
    let RootsOutcome { roots, residual } = polynomial_roots(&p, tol, 500)?;
    Ok(Spectrum::complex(roots, residual))
}

/// Adjacency, Laplacian or normalized spectrum of a graph, all real.
pub fn graph_spectrum(
    g: &Graph,
    kind: crate::graph::GraphMatrixKind,
    tol: f64,
) -> Result<Spectrum, OracleError> {
    match kind {
        crate::graph::GraphMatrixKind::NormalizedAdjacency => normalized_spectrum(g, tol),
        other => symmetric_eigenvalues(&crate::graph::build_matrix(g, other)?, tol),
    }
}
