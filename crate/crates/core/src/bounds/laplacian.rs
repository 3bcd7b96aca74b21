//! Bounds on the largest and second-smallest Laplacian eigenvalues.

use alloc::vec;
use alloc::vec::Vec;

use super::{ratio, BoundError, BoundInterval, Ctx, Mode, Target, Theorem};
use crate::graph::Graph;

/// Trace bounds from the deflated Laplacian, with trace `nΔ` and
/// `trace(L(k)²) = Σd_i² + nΔ`.
///
/// The spread is `S = Σd² + 2|E| - 4|E|²/(n-1)`, formed exactly as
/// `S (n-1) = (Σd² + 2|E|)(n-1) - 4|E|²`.
pub fn laplacian_trace_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    laplacian_trace_in(Ctx::new(g, Theorem::LaplacianTrace))
}

pub(super) fn laplacian_trace_in(mut ctx: Ctx<'_>) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)? as i128;
    let e = ctx.g.size() as i128;
    let sum_sq: i128 = (0..ctx.g.order())
        .map(|v| (ctx.g.degree0(v) as i128).pow(2))
        .sum();
    let k = (sum_sq + 2 * e) * (n - 1) - 4 * e * e;
    let m = ratio(2 * e, n - 1);
    let wide = ctx.sqrt(((n - 2) * k) as f64)? / (n - 1) as f64;
    let narrow = ctx.sqrt(ratio(k, n - 2))? / (n - 1) as f64;
    Ok(vec![
        ctx.interval(Target::Lambda1, m + narrow, m + wide),
        ctx.interval(Target::LambdaNMinus1, m - wide, m - narrow),
    ])
}

/// Deflated Geršgorin disks of `L`: for `k ~ i` the disk of `L(i)` is centred
/// at `d_k + 1` with radius `d_i + d_k - 2N(i,k) - 2`, otherwise at `d_k`
/// with radius `d_i + d_k - 2N(i,k)`.
///
/// Lower ends use `α_ik = -d_i + 2N(i,k) + [k~i]`, upper ends use the disk
/// ends `β_ik = d_i + 2d_k - 2N(i,k) - [k~i]`. `λ_1` and `λ_{n-1}` both lie
/// in `[max_i min_k α_ik, min_i max_k β_ik]`.
pub fn laplacian_common_neighbor_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    laplacian_common_neighbor_in(Ctx::new(g, Theorem::LaplacianCommonNeighborDisks))
}

pub(super) fn laplacian_common_neighbor_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(2)?;
    let g = ctx.g;
    let mut lower = i64::MIN;
    let mut upper = i64::MAX;
    for i in 0..n {
        let di = g.degree0(i) as i64;
        let mut row_min = i64::MAX;
        let mut row_max = i64::MIN;
        for k in (0..n).filter(|&k| k != i) {
            let dk = g.degree0(k) as i64;
            let twice_common = 2 * g.common0(i, k) as i64;
            let adj = g.adjacent0(i, k) as i64;
            row_min = row_min.min(-di + twice_common + adj);
            row_max = row_max.max(di + 2 * dk - twice_common - adj);
        }
        lower = lower.max(row_min);
        upper = upper.min(row_max);
    }
    let (lower, upper) = (lower as f64, upper as f64);
    Ok(vec![
        ctx.interval(Target::Lambda1, lower, upper),
        ctx.interval(Target::LambdaNMinus1, lower, upper),
    ])
}

/// Deflated Brauer ovals about a dominating vertex `i`: foci `d_j + 1`,
/// `d_k + 1` and radius product `r_j r_k` with `r = n - d` (published) or
/// `r = n - 1 - d` (corrected).
///
/// Each oval meets the real line inside
/// `[(d_j + d_k + 2 ∓ √((d_j - d_k)² + 4 r_j r_k)) / 2]`; the bound is the
/// hull of those over pairs, then the tightest over dominating vertices.
pub fn laplacian_dominating_brauer_bounds(
    g: &Graph,
    mode: Mode,
) -> Result<Vec<BoundInterval>, BoundError> {
    laplacian_dominating_brauer_in(Ctx::new(g, Theorem::LaplacianDominatingOvals), mode)
}

pub(super) fn laplacian_dominating_brauer_in(
    mut ctx: Ctx<'_>,
    mode: Mode,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)?;
    let hubs = ctx.dominating()?;
    ctx.assumptions.push(alloc::format!("{} mode", mode.as_str()));
    let full = match mode {
        Mode::Published => n as i64,
        Mode::Corrected => n as i64 - 1,
    };
    let deg: Vec<i64> = (0..n).map(|v| ctx.g.degree0(v) as i64).collect();
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for &i in &hubs {
        let mut row_lower = f64::INFINITY;
        let mut row_upper = f64::NEG_INFINITY;
        for j in (0..n).filter(|&j| j != i) {
            for k in (j + 1..n).filter(|&k| k != i) {
                let (dj, dk) = (deg[j], deg[k]);
                let root = ctx.sqrt(((dj - dk).pow(2) + 4 * (full - dj) * (full - dk)) as f64)?;
                let mid = (dj + dk + 2) as f64;
                row_lower = row_lower.min((mid - root) / 2.0);
                row_upper = row_upper.max((mid + root) / 2.0);
            }
        }
        lower = lower.max(row_lower);
        upper = upper.min(row_upper);
    }
    Ok(vec![
        ctx.interval(Target::Lambda1, lower, upper),
        ctx.interval(Target::LambdaNMinus1, lower, upper),
    ])
}
