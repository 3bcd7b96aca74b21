use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::charpoly::eval_poly;
use super::OracleError;
use crate::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct RootsOutcome {
    pub roots: Vec<Complex64>,
    /// Largest relative backward error `|p(z)| / Σ|c_k||z|^k` over the roots.
    pub residual: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let t = s - a;
    (s, (a - (s - t)) + (b - t))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

/// Horner's rule with error-free transformations: the result is as
/// accurate as plain evaluation in twice the working precision.
fn eval_compensated(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut hi = Complex64::zero();
    let mut lo = Complex64::zero();
    for &c in coeffs.iter().rev() {
        let (p1, e1) = two_prod(hi.re, z.re);
        let (p2, e2) = two_prod(hi.im, z.im);
        let (p3, e3) = two_prod(hi.re, z.im);
        let (p4, e4) = two_prod(hi.im, z.re);
        let (re, e5) = two_sum(p1, -p2);
        let (im, e6) = two_sum(p3, p4);
        let (re, e7) = two_sum(re, c.re);
        let (im, e8) = two_sum(im, c.im);
        let err = Complex64::new(e1 - e2 + e5 + e7, e3 + e4 + e6 + e8);
        lo = lo * z + err;
        hi = Complex64::new(re, im);
    }
    hi + lo
}

fn magnitude(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let m = magnitude(coeffs, z);
    if m == 0.0 {
        0.0
    } else {
        eval_compensated(coeffs, z).norm() / m
    }
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

/// All roots of a polynomial (lowest degree first, nonzero leading
/// coefficient) by Aberth–Ehrlich iteration from a perturbed circle, followed
/// by refinement of clustered roots.
///
/// Iteration stops once every root has relative backward error at most
/// `tol`, or when corrections stall at rounding level.
pub fn polynomial_roots(
    coeffs: &[Complex64],
    tol: f64,
    max_iterations: usize,
) -> Result<RootsOutcome, OracleError> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    // exact zero roots are split off; relative backward error never
    // settles near them
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count().min(coeffs.len() - 1);
    let mut out = polynomial_roots_nonzero(&coeffs[zeros..], tol, max_iterations)?;
    out.roots.extend(core::iter::repeat_n(Complex64::zero(), zeros));
    Ok(out)
}

fn polynomial_roots_nonzero(
    coeffs: &[Complex64],
    tol: f64,
    max_iterations: usize,
) -> Result<RootsOutcome, OracleError> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(RootsOutcome {
            roots: Vec::new(),
            residual: 0.0,
        });
    }
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();
    if degree == 1 {
        let root = -monic[0];
        return Ok(RootsOutcome {
            roots: vec![root],
            residual: backward_error(&monic, root),
        });
    }
    let dp = derivative(&monic);

    // Roots are centred on their mean; Fujiwara's bound of the shifted
    // polynomial sets the starting circle.
    let center = -monic[degree - 1] / degree as f64;
    let shifted = taylor_shift(&monic, center);
    let radius = fujiwara_bound(&shifted).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * core::f64::consts::PI * k as f64 / degree as f64 + 0.4;
            center + Complex64::from_polar(radius, angle)
        })
        .collect();

    // iterate past `tol` until corrections stall, since small backward
    // error alone leaves ill-conditioned roots inaccurate
    let mut iterations = 0;
    while iterations < max_iterations {
        let mut moved = false;
        for i in 0..degree {
            let p = eval_compensated(&monic, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / eval_poly(&dp, z[i]);
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                if step.norm() > 4.0 * f64::EPSILON * z[i].norm().max(1.0) {
                    moved = true;
                }
                z[i] -= step;
            }
        }
        iterations += 1;
        if !moved {
            break;
        }
    }

    refine_clusters(&monic, &mut z);
    let residual = z
        .iter()
        .map(|&x| backward_error(&monic, x))
        .fold(0.0, f64::max);
    if !(residual <= tol) {
        return Err(OracleError::NoConvergence {
            iterations,
            residual,
        });
    }
    Ok(RootsOutcome { roots: z, residual })
}

/// Coefficients of `p(x + c)`.
fn taylor_shift(coeffs: &[Complex64], c: Complex64) -> Vec<Complex64> {
    let mut a = coeffs.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let next = a[j + 1];
            a[j] += c * next;
        }
    }
    a
}

/// `2 · max_k |c_{n-k}|^{1/k}` for a monic polynomial (Fujiwara).
fn fujiwara_bound(monic: &[Complex64]) -> f64 {
    let n = monic.len() - 1;
    (1..=n)
        .map(|k| {
            let c = monic[n - k].norm();
            let c = if k == n { c / 2.0 } else { c };
            libm::pow(c, 1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0
}

/// Replaces each cluster of `m >= 2` approximate roots by `m` copies of the
/// nearby simple root of `p^{(m-1)}`, when Newton's method finds one inside
/// the cluster.
///
/// Clusters are the connected components of the inclusion disks
/// `|z - z_i| <= n (|p(z_i)| + δ_i) / |Π_{j≠i} (z_i - z_j)|`, where `δ_i`
/// bounds the rounding error of compensated evaluation at `z_i`. A cluster of
/// `m` is replaced only when the candidate also zeroes `p', ..., p^{(m-1)}`. Roots of multiplicity
/// `m` are only determined to about `ε^{1/m}` by `p` itself; their cluster
/// centre is a simple root of the `(m-1)`-th derivative and is recovered to
/// working accuracy.
fn refine_clusters(monic: &[Complex64], z: &mut [Complex64]) {
    let n = z.len();
    let radius: Vec<f64> = (0..n)
        .map(|i| {
            let gamma = 2.0 * (n as f64 + 1.0) * f64::EPSILON;
            let p = eval_compensated(monic, z[i]).norm();
            let value = p * (1.0 + f64::EPSILON) + gamma * gamma * magnitude(monic, z[i]);
            // coincident approximations join the cluster at distance zero
            let denom: f64 = (0..n)
                .filter(|&j| j != i && z[j] != z[i])
                .map(|j| (z[i] - z[j]).norm())
                .product();
            n as f64 * value / denom
        })
        .collect();

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if (z[i] - z[j]).norm() <= radius[i] + radius[j] {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = find(&mut parent, i);
        groups[r].push(i);
    }

    for members in groups.into_iter().filter(|g| g.len() >= 2) {
        let m = members.len();
        let centroid = members.iter().map(|&i| z[i]).sum::<Complex64>() / m as f64;
        let reach = members
            .iter()
            .map(|&i| (z[i] - centroid).norm() + radius[i].min(f64::MAX))
            .fold(0.0, f64::max);
        let mut d = monic.to_vec();
        for _ in 0..m - 1 {
            d = derivative(&d);
        }
        let dd = derivative(&d);
        // Newton until the step stops shrinking
        let mut x = centroid;
        let mut last = f64::INFINITY;
        let mut ok = false;
        for _ in 0..100 {
            let step = eval_compensated(&d, x) / eval_poly(&dd, x);
            if !step.is_finite() {
                break;
            }
            let size = step.norm();
            if size >= last {
                ok = last <= 1e-6 * x.norm().max(1.0);
                break;
            }
            x -= step;
            last = size;
            if size <= 4.0 * f64::EPSILON * x.norm().max(1.0) {
                ok = true;
                break;
            }
        }
        // an m-fold root annihilates p and its first m - 1 derivatives
        let floor = 64.0 * (n as f64 + 1.0) * f64::EPSILON;
        if ok && (x - centroid).norm() <= reach {
            let mut q = monic.to_vec();
            let mut fold = true;
            for _ in 0..m {
                if backward_error(&q, x) > floor {
                    fold = false;
                    break;
                }
                q = derivative(&q);
            }
            if fold {
                for &i in &members {
                    z[i] = x;
                }
            }
        }
    }
}
