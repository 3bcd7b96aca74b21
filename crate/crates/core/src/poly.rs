//! Real polynomials: evaluation and isolation of all real roots.
//!
//! Roots are isolated recursively: the critical points of `p` split the line
//! into monotone pieces, each holding at most one root, which bisection then
//! pins down to the last representable bit. Roots of even multiplicity show up
//! as critical points where `p` vanishes to rounding level.

use alloc::vec;
use alloc::vec::Vec;

/// Polynomial with real coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        RealPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Rounding-error bound for Horner evaluation at `x`.
    pub fn eval_error_bound(&self, x: f64) -> f64 {
        let ax = x.abs();
        let magnitude = self
            .coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * ax + c.abs());
        4.0 * (self.coeffs.len() as f64) * f64::EPSILON * magnitude
    }

    pub fn derivative(&self) -> RealPoly {
        if self.coeffs.len() <= 1 {
            return RealPoly::new(vec![0.0]);
        }
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &RealPoly) -> RealPoly {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::new(out)
    }

    /// Root bound: every real root lies in `[-B, B]`.
    fn cauchy_bound(&self) -> f64 {
        let lead = self.coeffs[self.degree()];
        1.0 + self.coeffs[..self.degree()]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max)
    }

    /// All real roots, sorted ascending. Repeated roots are reported once.
    /// The zero polynomial has no isolated roots and yields an empty list.
    pub fn real_roots(&self) -> Vec<f64> {
        match self.degree() {
            0 => Vec::new(),
            1 => vec![-self.coeffs[0] / self.coeffs[1]],
            _ => {
                let bound = self.cauchy_bound();
                let mut breaks = vec![-bound];
                breaks.extend(
                    self.derivative()
                        .real_roots()
                        .into_iter()
                        .filter(|c| c.abs() < bound),
                );
                breaks.push(bound);

                let mut roots = Vec::new();
                for (idx, w) in breaks.windows(2).enumerate() {
                    let (l, r) = (w[0], w[1]);
                    let (fl, fr) = (self.eval(l), self.eval(r));
                    if idx > 0 && fl.abs() <= self.eval_error_bound(l) {
                        roots.push(l);
                    } else if fl == 0.0 {
                        roots.push(l);
                    }
                    if fl.signum() * fr.signum() < 0.0 {
                        roots.push(bisect(|x| self.eval(x), l, r, fl));
                    }
                }
                let last = *breaks.last().unwrap();
                if self.eval(last) == 0.0 {
                    roots.push(last);
                }
                roots.sort_by(f64::total_cmp);
                roots.dedup_by(|a, b| (*a - *b).abs() <= 4.0 * f64::EPSILON * b.abs().max(1.0));
                roots
            }
        }
    }
}

/// Bisects a sign change of `f` on `[lo, hi]` until the midpoint is no longer
/// representable between the endpoints.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    for _ in 0..2100 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    if f_lo.abs() <= f(hi).abs() {
        lo
    } else {
        hi
    }
}

/// Closed intervals covering `{x : inside(x)}` given the sorted points where
/// membership may change. The set must be bounded: both unbounded rays are
/// taken to lie outside.
pub fn sublevel_intervals<F: Fn(f64) -> bool>(breaks: &[f64], inside: F) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::new();
    let mut push = |lo: f64, hi: f64| match out.last_mut() {
        Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
        _ => out.push((lo, hi)),
    };
    for (i, &b) in breaks.iter().enumerate() {
        if inside(b) {
            push(b, b);
        }
        if let Some(&next) = breaks.get(i + 1) {
            if next > b && inside(0.5 * (b + next)) {
                push(b, next);
            }
        }
    }
    out
}
