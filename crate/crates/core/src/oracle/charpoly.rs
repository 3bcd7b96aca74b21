use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::OracleError;
use crate::matrix::ComplexMatrix;
use crate::Complex64;

pub const MAX_CHARPOLY_DIM: usize = 64;

/// Error-free `a + b = s + e`.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Error-free `a · b = p + e`.
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

/// Double-length real accumulator.
#[derive(Clone, Copy, Default)]
struct Acc {
    hi: f64,
    lo: f64,
}

impl Acc {
    fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        self.hi = s;
        self.lo += e;
    }

    fn add_prod(&mut self, a: f64, b: f64) {
        let (p, e) = two_prod(a, b);
        self.add(p);
        self.lo += e;
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Clone, Copy, Default)]
struct ComplexAcc {
    re: Acc,
    im: Acc,
}

impl ComplexAcc {
    fn add_prod(&mut self, a: Complex64, b: Complex64) {
        self.re.add_prod(a.re, b.re);
        self.re.add_prod(-a.im, b.im);
        self.im.add_prod(a.re, b.im);
        self.im.add_prod(a.im, b.re);
    }

    fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// Monic characteristic polynomial `det(xI - M)`, lowest degree first, by the
/// trace recursion `M_k = M·M_{k-1} + c_{n-k+1} I`,
/// `c_{n-k} = -tr(M·M_k) / k`, with double-length accumulation of every
/// product and trace.
pub fn charpoly(m: &ComplexMatrix) -> Result<Vec<Complex64>, OracleError> {
    let n = m.dim();
    if n > MAX_CHARPOLY_DIM {
        return Err(OracleError::DimensionCap {
            n,
            max: MAX_CHARPOLY_DIM,
        });
    }
    let mut coeffs = vec![Complex64::zero(); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    // M_1 = I
    let mut mk = ComplexMatrix::identity(n);
    for k in 1..=n {
        // tr(M · M_k)
        let mut tr = ComplexAcc::default();
        for i in 0..n {
            for j in 0..n {
                tr.add_prod(m[(i, j)], mk[(j, i)]);
            }
        }
        let c = -tr.value() / k as f64;
        coeffs[n - k] = c;
        if k == n {
            break;
        }
        // M_{k+1} = M · M_k + c I
        let mut next = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ComplexAcc::default();
                for l in 0..n {
                    acc.add_prod(m[(i, l)], mk[(l, j)]);
                }
                if i == j {
                    acc.re.add(c.re);
                    acc.im.add(c.im);
                }
                next[(i, j)] = acc.value();
            }
        }
        mk = next;
    }
    Ok(coeffs)
}

/// Horner evaluation of a polynomial with coefficients lowest degree first.
pub fn eval_poly(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_matrix, generate, Family, GraphMatrixKind};
    use crate::matrix::fixtures::{c, worked_example};

    #[test]
    fn swap_matrix() {
        let m = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(charpoly(&m).unwrap(), vec![c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn triangle_adjacency() {
        let a = build_matrix(&generate(&Family::Complete(3)).unwrap(), GraphMatrixKind::Adjacency)
            .unwrap();
        // x^3 - 3x - 2
        assert_eq!(
            charpoly(&a).unwrap(),
            vec![c(-2.0, 0.0), c(-3.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]
        );
    }

    #[test]
    fn worked_example_has_row_sum_root() {
        let p = charpoly(&worked_example()).unwrap();
        assert!(eval_poly(&p, c(2.0, 2.0)).norm() <= 1e-12);
    }

    #[test]
    fn dimension_cap() {
        assert!(matches!(
            charpoly(&ComplexMatrix::zeros(65)),
            Err(OracleError::DimensionCap { n: 65, max: 64 })
        ));
    }
}
