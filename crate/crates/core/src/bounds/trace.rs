use super::BoundError;

/// Mean and spread of a real spectrum known only through its first two
/// power sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStats {
    pub m: f64,
    pub s: f64,
    pub n_eff: usize,
}

/// Tag of the generic trace bound in reports and CLI output.
pub const TRACE_BOUND_TAG: &str = "Thm1.4";

impl TraceStats {
    /// Interval for the largest eigenvalue.
    pub fn largest(&self) -> (f64, f64) {
        let r = libm::sqrt((self.n_eff - 1) as f64);
        (self.m + self.s / r, self.m + self.s * r)
    }

    /// Interval for the smallest eigenvalue.
    pub fn smallest(&self) -> (f64, f64) {
        let r = libm::sqrt((self.n_eff - 1) as f64);
        (self.m - self.s * r, self.m - self.s / r)
    }
}

/// Statistics of an `n`-point real spectrum with `Σλ = trace` and
/// `Σλ² = trace_sq`.
///
/// A variance within rounding noise of zero (relative to the two terms it
/// is the difference of) is taken as zero, as is any value in `[-1e-9, 0)`.
pub fn trace_bounds(trace: f64, trace_sq: f64, n: usize) -> Result<TraceStats, BoundError> {
    if n < 2 {
        return Err(BoundError::TraceDimension(n));
    }
    let m = trace / n as f64;
    let second = trace_sq / n as f64;
    let mut var = second - m * m;
    let noise = 64.0 * f64::EPSILON * second.abs().max(m * m);
    if var.abs() <= noise || (-super::RADICAND_CLAMP..0.0).contains(&var) {
        var = 0.0;
    }
    if var < 0.0 || !var.is_finite() {
        return Err(BoundError::InconsistentMoments { variance: var });
    }
    Ok(TraceStats {
        m,
        s: libm::sqrt(var),
        n_eff: n,
    })
}
