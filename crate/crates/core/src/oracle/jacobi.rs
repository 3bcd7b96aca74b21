use alloc::vec;
use alloc::vec::Vec;

use super::{OracleError, Spectrum};
use crate::graph::{Graph, GraphError};
use crate::matrix::ComplexMatrix;

pub const MAX_SYMMETRIC_DIM: usize = 2048;
const MAX_SWEEPS: usize = 50;

/// Cyclic Jacobi diagonalization of a real symmetric matrix.
///
/// Sweeps continue until the off-diagonal Frobenius mass drops to
/// `tol · max(1, ‖M‖_F)`; that final mass is the residual certificate.
pub fn symmetric_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Spectrum, OracleError> {
    let n = m.dim();
    if n > MAX_SYMMETRIC_DIM {
        return Err(OracleError::DimensionCap {
            n,
            max: MAX_SYMMETRIC_DIM,
        });
    }
    let scale = m.frobenius_norm().max(1.0);
    if !m.is_real_symmetric(1e-12 * scale) {
        return Err(OracleError::NotSymmetric);
    }
    let mut a: Vec<f64> = m.rows().flat_map(|r| r.iter().map(|z| z.re)).collect();
    // symmetrize exactly so rotations stay consistent
    for i in 0..n {
        for j in i + 1..n {
            let v = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    let (values, residual) = jacobi_in_place(&mut a, n, tol * scale)?;
    Ok(Spectrum::real(values, residual))
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    libm::sqrt(s)
}

fn jacobi_in_place(a: &mut [f64], n: usize, target: f64) -> Result<(Vec<f64>, f64), OracleError> {
    let mut off = off_diagonal_mass(a, n);
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(OracleError::NoConvergence {
                iterations: sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.is_finite() {
                    let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                } else {
                    0.0
                };
                if t == 0.0 {
                    continue;
                }
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        sweeps += 1;
        off = off_diagonal_mass(a, n);
    }
    Ok(((0..n).map(|i| a[i * n + i]).collect(), off))
}

/// Spectrum of `D^{-1} A` through the similar symmetric matrix
/// `D^{-1/2} A D^{-1/2}`.
pub fn normalized_spectrum(g: &Graph, tol: f64) -> Result<Spectrum, OracleError> {
    let n = g.order();
    if n > MAX_SYMMETRIC_DIM {
        return Err(OracleError::DimensionCap {
            n,
            max: MAX_SYMMETRIC_DIM,
        });
    }
    if let Some(v) = (0..n).find(|&v| g.degree0(v) == 0) {
        return Err(GraphError::IsolatedVertex(v + 1).into());
    }
    let inv_sqrt: Vec<f64> = (0..n)
        .map(|v| 1.0 / libm::sqrt(g.degree0(v) as f64))
        .collect();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for &v in g.neighbors0(u) {
            a[u * n + v] = inv_sqrt[u] * inv_sqrt[v];
        }
    }
    let scale = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>()).max(1.0);
    let (values, residual) = jacobi_in_place(&mut a, n, tol * scale)?;
    Ok(Spectrum::real(values, residual))
}
