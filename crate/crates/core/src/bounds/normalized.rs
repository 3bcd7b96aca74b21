//! Bounds on the spectrum of `D⁻¹A`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul};

use super::{BoundError, BoundInterval, Ctx, Target, Theorem};
use crate::graph::{randic_index, randic_inverse_ratio, Graph};

type Q = Ratio<i128>;

fn to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// `R_{-1}`, exact when its denominator fits.
enum Randic {
    Exact(Q),
    Approx(f64),
}

impl Randic {
    fn of(ctx: &Ctx<'_>) -> Result<Self, BoundError> {
        match randic_inverse_ratio(ctx.g) {
            Some(q) => Ok(Randic::Exact(q)),
            None => randic_index(ctx.g, -1.0)
                .map(Randic::Approx)
                .map_err(|e| BoundError::Precondition {
                    theorem: ctx.theorem,
                    reason: alloc::format!("{e}"),
                }),
        }
    }

    /// `(a R + b) / c`.
    fn affine(&self, a: i128, b: i128, c: i128) -> f64 {
        match self {
            Randic::Exact(r) => {
                let v = r
                    .checked_mul(&Q::from_integer(a))
                    .and_then(|v| v.checked_add(&Q::from_integer(b)));
                match v {
                    Some(v) => to_f64(v) / c as f64,
                    None => (a as f64 * to_f64(*r) + b as f64) / c as f64,
                }
            }
            Randic::Approx(r) => (a as f64 * r + b as f64) / c as f64,
        }
    }
}

/// Trace bounds on `λ_2` and `λ_n` from the deflated matrix with trace `-1`
/// and `trace(𝒜(k)²) = 2R_{-1} - 1`.
pub fn normalized_trace_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    normalized_trace_in(Ctx::new(g, Theorem::NormalizedTrace))
}

pub(super) fn normalized_trace_in(mut ctx: Ctx<'_>) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)? as i128;
    let r = Randic::of(&ctx)?;
    let m = -1.0 / (n - 1) as f64;
    // radicand 2(n-1)R - n
    let wide = ctx.sqrt(r.affine(2 * (n - 1) * (n - 2), -n * (n - 2), 1))? / (n - 1) as f64;
    let narrow = ctx.sqrt(r.affine(2 * (n - 1), -n, n - 2))? / (n - 1) as f64;
    Ok(vec![
        ctx.interval(Target::Lambda2, m + narrow, m + wide),
        ctx.interval(Target::LambdaN, m - wide, m - narrow),
    ])
}

/// `λ_2` of a connected bipartite graph, from the spectrum with `±1`
/// removed.
pub fn normalized_bipartite_lambda2_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    normalized_bipartite_in(Ctx::new(g, Theorem::NormalizedBipartite))
}

pub(super) fn normalized_bipartite_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(4)? as i128;
    ctx.bipartite()?;
    let r = Randic::of(&ctx)?;
    let lower = ctx.sqrt(r.affine(2, -2, (n - 2) * (n - 3)))?;
    let upper = ctx.sqrt(r.affine(2 * (n - 3), -2 * (n - 3), n - 2))?;
    Ok(vec![ctx.interval(Target::Lambda2, lower, upper)])
}

/// `r_k(𝒜(i)) = (2d_k - 1)(n - 1 - d_k) / (d_k (n - 1))` for dominating `i`.
fn deleted_row_sum(n: i128, d: i128) -> Q {
    Q::new((2 * d - 1) * (n - 1 - d), d * (n - 1))
}

/// Deflated Geršgorin disks about a dominating vertex `i`: every eigenvalue
/// other than 1 satisfies `|λ + 1/(n-1)| ≤ r_k(𝒜(i))` for some `k ≠ i`.
///
/// Reported as `λ_n ≥ -2 - 2/(n-1) + t` and `λ_2 ≤ 2 - t` with
/// `t = min_{k≠i} (1/d_k + 2d_k/(n-1))`, best over dominating vertices.
pub fn normalized_dominating_gersgorin_bounds(
    g: &Graph,
) -> Result<Vec<BoundInterval>, BoundError> {
    normalized_dominating_gersgorin_in(Ctx::new(g, Theorem::NormalizedDominatingDisks))
}

pub(super) fn normalized_dominating_gersgorin_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)?;
    let hubs = ctx.dominating()?;
    let nn = n as i128;
    let term: Vec<Q> = (0..n)
        .map(|k| {
            let d = ctx.g.degree0(k) as i128;
            Q::new(nn - 1 + 2 * d * d, d * (nn - 1))
        })
        .collect();
    let two = Q::from_integer(2);
    let mut lower = f64::NEG_INFINITY;
    let mut upper = f64::INFINITY;
    for &i in &hubs {
        let t = (0..n)
            .filter(|&k| k != i)
            .map(|k| term[k])
            .min()
            .expect("n >= 3");
        lower = lower.max(to_f64(t - two - Q::new(2, nn - 1)));
        upper = upper.min(to_f64(two - t));
    }
    Ok(vec![
        ctx.interval(Target::Lambda2, lower, upper),
        ctx.interval(Target::LambdaN, lower, upper),
    ])
}

/// Deflated Brauer ovals about a dominating vertex `i`:
/// `|λ + 1/(n-1)| ≤ max_{j≠k} √(r_j r_k)` over `j, k ≠ i`.
pub fn normalized_dominating_brauer_bounds(g: &Graph) -> Result<Vec<BoundInterval>, BoundError> {
    normalized_dominating_brauer_in(Ctx::new(g, Theorem::NormalizedDominatingOvals))
}

pub(super) fn normalized_dominating_brauer_in(
    mut ctx: Ctx<'_>,
) -> Result<Vec<BoundInterval>, BoundError> {
    ctx.connected()?;
    let n = ctx.min_order(3)?;
    let hubs = ctx.dominating()?;
    let nn = n as i128;
    let rho: Vec<Q> = (0..n)
        .map(|k| deleted_row_sum(nn, ctx.g.degree0(k) as i128))
        .collect();
    let center = -1.0 / (nn - 1) as f64;
    let mut radius = f64::INFINITY;
    for &i in &hubs {
        // the largest pairwise product comes from the two largest sums
        let mut top: Vec<Q> = (0..n).filter(|&k| k != i).map(|k| rho[k]).collect();
        top.sort_unstable_by(|a, b| b.cmp(a));
        radius = radius.min(ctx.sqrt(to_f64(top[0] * top[1]))?);
    }
    Ok(vec![
        ctx.interval(Target::Lambda2, center - radius, center + radius),
        ctx.interval(Target::LambdaN, center - radius, center + radius),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::trace_bounds;
    use crate::graph::{generate, Family};

    fn g(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn ends(v: &[BoundInterval], t: Target) -> (f64, f64) {
        let b = v.iter().find(|b| b.target == t).unwrap();
        (b.lower, b.upper)
    }

    fn near(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
        (a.0 - b.0).abs() <= tol && (a.1 - b.1).abs() <= tol
    }

    fn wheel5() -> Graph {
        Graph::new(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap()
    }

    #[test]
    fn trace_examples() {
        let k4 = normalized_trace_bounds(&g(Family::Complete(4))).unwrap();
        assert_eq!(ends(&k4, Target::Lambda2), (-1.0 / 3.0, -1.0 / 3.0));
        assert_eq!(ends(&k4, Target::LambdaN), (-1.0 / 3.0, -1.0 / 3.0));

        let star = normalized_trace_bounds(&g(Family::Star(4))).unwrap();
        assert!(near(ends(&star, Target::Lambda2), (0.0, 1.0 / 3.0), 1e-15));

        let p3 = normalized_trace_bounds(&g(Family::Path(3))).unwrap();
        let (lo, hi) = ends(&p3, Target::Lambda2);
        assert!(lo <= 0.0 && 0.0 <= hi);
    }

    #[test]
    fn trace_matches_generic_form() {
        for f in [Family::Path(6), Family::Petersen, Family::Star(7), Family::CompleteMinusEdge(6)] {
            let graph = g(f);
            let n = graph.order();
            let r = randic_index(&graph, -1.0).unwrap();
            let t = trace_bounds(-1.0, 2.0 * r - 1.0, n - 1).unwrap();
            let got = normalized_trace_bounds(&graph).unwrap();
            assert!(near(ends(&got, Target::Lambda2), t.largest(), 1e-13));
            assert!(near(ends(&got, Target::LambdaN), t.smallest(), 1e-13));
        }
    }

    #[test]
    fn bipartite_examples() {
        for (p, q) in [(1, 3), (2, 2), (2, 5), (5, 5)] {
            let b = normalized_bipartite_lambda2_bounds(&g(Family::CompleteBipartite(p, q))).unwrap();
            assert_eq!(ends(&b, Target::Lambda2), (0.0, 0.0));
        }
        let c6 = normalized_bipartite_lambda2_bounds(&g(Family::Cycle(6))).unwrap();
        assert!(near(ends(&c6, Target::Lambda2), (libm::sqrt(1.0 / 12.0), libm::sqrt(0.75)), 1e-15));
        let p4 = normalized_bipartite_lambda2_bounds(&g(Family::Path(4))).unwrap();
        assert!(near(ends(&p4, Target::Lambda2), (0.5, 0.5), 1e-15));
    }

    #[test]
    fn dominating_disk_examples() {
        for n in 3..=10 {
            let kn = normalized_dominating_gersgorin_bounds(&g(Family::Complete(n))).unwrap();
            let v = -1.0 / (n - 1) as f64;
            assert!(near(ends(&kn, Target::Lambda2), (v, v), 1e-15));
        }
        let star = normalized_dominating_gersgorin_bounds(&g(Family::Star(5))).unwrap();
        assert_eq!(ends(&star, Target::Lambda2), (-1.0, 0.5));
        let w = normalized_dominating_gersgorin_bounds(&wheel5()).unwrap();
        assert!(near(ends(&w, Target::LambdaN), (-2.0 / 3.0, 1.0 / 6.0), 1e-15));
        assert!(matches!(
            normalized_dominating_gersgorin_bounds(&g(Family::Cycle(4))),
            Err(BoundError::Precondition { reason, .. }) if reason == "no dominating vertex"
        ));
    }

    #[test]
    fn dominating_oval_examples() {
        for n in 3..=10 {
            let kn = normalized_dominating_brauer_bounds(&g(Family::Complete(n))).unwrap();
            let v = -1.0 / (n - 1) as f64;
            assert_eq!(ends(&kn, Target::LambdaN), (v, v));
        }
        let star = normalized_dominating_brauer_bounds(&g(Family::Star(5))).unwrap();
        assert!(near(ends(&star, Target::LambdaN), (-1.0, 0.5), 1e-15));
        let w = normalized_dominating_brauer_bounds(&wheel5()).unwrap();
        assert!((ends(&w, Target::Lambda2).1 - 1.0 / 6.0).abs() < 1e-15);
    }
}
