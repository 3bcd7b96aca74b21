//! Bounds on the adjacency spectrum of regular and bipartite graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::{ratio, BoundError, BoundInterval, Ctx, Target, Theorem};
use crate::graph::Graph;

/// Trace bounds on `λ_2` and `λ_n` for a connected `d`-regular graph, from
/// the deflated matrix with trace `-d` and `trace(A(k)²) = nd - d²`.
pub fn regular_adjacency_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    regular_adjacency_in(Ctx::new(g, Theorem::RegularAdjacencyTrace))
}

pub(super) fn regular_adjacency_in(mut ctx: Ctx<'_>) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)? as i128;
    let d = ctx.regular()? as i128;
    let k = n * d * (n - d - 1);
    let m = -ratio(d, n - 1);
    let wide = ctx.sqrt(((n - 2) * k) as f64)? / (n - 1) as f64;
    let narrow = ctx.sqrt(ratio(k, n - 2))? / (n - 1) as f64;
    Ok(vec![
        ctx.interval(Target::Lambda2, m + narrow, m + wide),
        ctx.interval(Target::LambdaN, m - wide, m - narrow),
    ])
}

/// `λ_2` of a connected `(c, d)`-biregular bipartite graph, from the
/// spectrum with `±√(cd)` removed.
pub fn biregular_bipartite_lambda2_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    biregular_bipartite_in(Ctx::new(g, Theorem::BiregularBipartite))
}

pub(super) fn biregular_bipartite_in(mut ctx: Ctx<'_>) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(4)? as i128;
    let (c, d) = ctx.biregular()?;
    let twice_excess = 2 * (ctx.g.size() as i128 - (c * d) as i128);
    bipartite_interval(&ctx, n, twice_excess)
}

/// The biregular bound specialised to `c = d`, with `2(|E| - d²) = d(n - 2d)`.
pub fn regular_bipartite_lambda2_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    regular_bipartite_in(Ctx::new(g, Theorem::RegularBipartite))
}

pub(super) fn regular_bipartite_in(mut ctx: Ctx<'_>) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(4)? as i128;
    let d = ctx.regular()? as i128;
    ctx.bipartite()?;
    bipartite_interval(&ctx, n, d * (n - 2 * d))
}

fn bipartite_interval(
    ctx: &Ctx<'_>,
    n: i128,
    twice_excess: i128,
) -> Result<Vec<BoundInterval>, BoundError> {
    let lower = ctx.sqrt(ratio(twice_excess, (n - 2) * (n - 3)))?;
    let upper = ctx.sqrt(ratio((n - 3) * twice_excess, n - 2))?;
    Ok(vec![ctx.interval(Target::Lambda2, lower, upper)])
}

/// Endpoints from the deflated Geršgorin disks of a `d`-regular graph:
/// `λ_n ≥ -2d + max_i max(min_k α_ik, d)` and
/// `λ_2 ≤ 2d - max_i max(min_k β_ik, d)`.
///
/// Both intervals are `[lower, upper]` since `λ_n ≤ λ_2`.
pub fn regular_common_neighbor_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    regular_common_neighbor_in(Ctx::new(g, Theorem::RegularCommonNeighborDisks))
}

pub(super) fn regular_common_neighbor_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(2)?;
    let d = ctx.regular()? as i64;
    let g = ctx.g;
    let mut best_alpha = i64::MIN;
    let mut best_beta = i64::MIN;
    for i in 0..n {
        let mut min_alpha = i64::MAX;
        let mut min_beta = i64::MAX;
        for k in (0..n).filter(|&k| k != i) {
            let twice_common = 2 * g.common0(i, k) as i64;
            let (alpha, beta) = if g.adjacent0(i, k) {
                (1 + twice_common, 3 + twice_common)
            } else {
                (twice_common, twice_common)
            };
            min_alpha = min_alpha.min(alpha);
            min_beta = min_beta.min(beta);
        }
        best_alpha = best_alpha.max(min_alpha.max(d));
        best_beta = best_beta.max(min_beta.max(d));
    }
    let lower = (-2 * d + best_alpha) as f64;
    let upper = (2 * d - best_beta) as f64;
    Ok(vec![
        ctx.interval(Target::Lambda2, lower, upper),
        ctx.interval(Target::LambdaN, lower, upper),
    ])
}

/// Endpoints from the deflated Brauer ovals of a `d`-regular graph:
/// `λ_n ≥ max_i min_{j,k} α_ijk` and `λ_2 ≤ min_i max_{j,k} β_ijk`, where the
/// oval for `{j, k}` has foci `-[j~i]`, `-[k~i]` and radius product
/// `4(d - N(i,j) - [j~i])(d - N(i,k) - [k~i])`.
pub fn regular_brauer_common_neighbor_bounds(
    g: &Graph,
) -> Result<Vec<BoundInterval>, BoundError> {
    regular_brauer_common_neighbor_in(Ctx::new(g, Theorem::RegularCommonNeighborOvals))
}

pub(super) fn regular_brauer_common_neighbor_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)?;
    let d = ctx.regular()? as i64;
    let g = ctx.g;
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for i in 0..n {
        // r_j(A(i)) / 2, and whether j ~ i
        let half_radius: Vec<(i64, bool)> = (0..n)
            .map(|j| {
                if j == i {
                    return (0, false);
                }
                let adj = g.adjacent0(i, j);
                (d - g.common0(i, j) as i64 - adj as i64, adj)
            })
            .collect();
        let mut row_lower = f64::INFINITY;
        let mut row_upper = f64::NEG_INFINITY;
        for j in (0..n).filter(|&j| j != i) {
            for k in (j + 1..n).filter(|&k| k != i) {
                let ((rj, aj), (rk, ak)) = (half_radius[j], half_radius[k]);
                let (lo, hi) = match (aj, ak) {
                    (true, true) => {
                        let h = 2.0 * ctx.sqrt((rj * rk) as f64)?;
                        (-1.0 - h, -1.0 + h)
                    }
                    (false, false) => {
                        let h = 2.0 * ctx.sqrt((rj * rk) as f64)?;
                        (-h, h)
                    }
                    _ => {
                        // |z||z + 1| ≤ 4 rj rk  ⇒  |z + 1/2| ≤ √(1 + 16 rj rk) / 2
                        let h = ctx.sqrt((1 + 16 * rj * rk) as f64)? / 2.0;
                        (-0.5 - h, -0.5 + h)
                    }
                };
                row_lower = row_lower.min(lo);
                row_upper = row_upper.max(hi);
            }
        }
        lower = lower.max(row_lower);
        upper = upper.min(row_upper);
    }
    Ok(vec![
        ctx.interval(Target::Lambda2, lower, upper),
        ctx.interval(Target::LambdaN, lower, upper),
    ])
}
