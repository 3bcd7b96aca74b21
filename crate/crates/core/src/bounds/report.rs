use alloc::string::String;
use alloc::vec::Vec;

use super::{adjacency, laplacian, normalized};
use super::{BoundError, BoundInterval, Ctx, Mode, Target, Theorem};
use crate::graph::{classify, Graph, GraphMatrixKind, StructureReport};
use crate::oracle::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub dominating: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Skipped {
    pub theorem: Theorem,
    pub reason: String,
}

/// Every bound for one matrix kind, in catalogue order: each theorem
/// either contributes intervals or is listed as skipped.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub graph: GraphSummary,
    pub kind: GraphMatrixKind,
    pub mode: Mode,
    pub bounds: Vec<BoundInterval>,
    pub skipped: Vec<Skipped>,
}

impl BoundReport {
    pub fn applied(&self) -> Vec<Theorem> {
        let mut out: Vec<Theorem> = self.bounds.iter().map(|b| b.theorem).collect();
        out.dedup();
        out
    }

    /// Intersection of all intervals per target, in `Target::ALL` order.
    pub fn combined(&self) -> Vec<(Target, f64, f64)> {
        Target::ALL
            .into_iter()
            .filter_map(|t| {
                let mut it = self.bounds.iter().filter(|b| b.target == t);
                let first = it.next()?;
                let (lo, hi) = it.fold((first.lower, first.upper), |(lo, hi), b| {
                    (lo.max(b.lower), hi.min(b.upper))
                });
                Some((t, lo, hi))
            })
            .collect()
    }
}

fn run(
    g: &Graph,
    s: &StructureReport,
    theorem: Theorem,
    mode: Mode,
) -> Result<Vec<BoundInterval>, BoundError> {
    let ctx = Ctx::with_structure(g, s.clone(), theorem);
    use Theorem::*;
    match theorem {
        RegularAdjacencyTrace => adjacency::regular_adjacency_in(ctx),
        BiregularBipartite => adjacency::biregular_bipartite_in(ctx),
        RegularBipartite => adjacency::regular_bipartite_in(ctx),
        RegularCommonNeighborDisks => adjacency::regular_common_neighbor_in(ctx),
        RegularCommonNeighborOvals => adjacency::regular_brauer_common_neighbor_in(ctx),
        NormalizedTrace => normalized::normalized_trace_in(ctx),
        NormalizedBipartite => normalized::normalized_bipartite_in(ctx),
        NormalizedDominatingDisks => normalized::normalized_dominating_gersgorin_in(ctx),
        NormalizedDominatingOvals => normalized::normalized_dominating_brauer_in(ctx),
        LaplacianTrace => laplacian::laplacian_trace_in(ctx),
        LaplacianCommonNeighborDisks => laplacian::laplacian_common_neighbor_in(ctx),
        LaplacianDominatingOvals => laplacian::laplacian_dominating_brauer_in(ctx, mode),
    }
}

/// Evaluates one theorem directly.
pub fn evaluate(g: &Graph, theorem: Theorem, mode: Mode) -> Result<Vec<BoundInterval>, BoundError> {
    run(g, &classify(g), theorem, mode)
}

/// One bound compared with the oracle eigenvalue it constrains.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub theorem: Theorem,
    pub target: Target,
    pub lower: f64,
    pub upper: f64,
    pub oracle: f64,
    /// `oracle - lower`; negative when the lower end is violated.
    pub slack_lower: f64,
    /// `upper - oracle`; negative when the upper end is violated.
    pub slack_upper: f64,
}

impl Verdict {
    pub fn passes(&self, tol: f64) -> bool {
        self.slack_lower >= -tol && self.slack_upper >= -tol
    }

    pub fn slack(&self) -> f64 {
        self.slack_lower.min(self.slack_upper)
    }
}

/// Pairs each interval with `λ_target` of a spectrum sorted descending.
pub fn check_against(bounds: &[BoundInterval], spectrum: &Spectrum) -> Vec<Verdict> {
    let n = spectrum.len();
    bounds
        .iter()
        .map(|b| {
            let oracle = spectrum.lambda(b.target.index(n));
            let (slack_lower, slack_upper) = b.slack(oracle);
            Verdict {
                theorem: b.theorem,
                target: b.target,
                lower: b.lower,
                upper: b.upper,
                oracle,
                slack_lower,
                slack_upper,
            }
        })
        .collect()
}

pub fn bounds_report(g: &Graph, kind: GraphMatrixKind, mode: Mode) -> BoundReport {
    let s = classify(g);
    let mut bounds = Vec::new();
    let mut skipped = Vec::new();
    for theorem in Theorem::ALL.into_iter().filter(|t| t.kind() == kind) {
        match run(g, &s, theorem, mode) {
            Ok(mut b) => bounds.append(&mut b),
            Err(BoundError::Precondition { reason, .. }) => skipped.push(Skipped { theorem, reason }),
            Err(e) => skipped.push(Skipped {
                theorem,
                reason: alloc::format!("{e}"),
            }),
        }
    }
    BoundReport {
        graph: GraphSummary {
            n: g.order(),
            edges: g.size(),
            connected: s.connected,
            regular: s.regular,
            bipartite: s.is_bipartite(),
            dominating: s.dominating,
        },
        kind,
        mode,
        bounds,
        skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn report(f: Family, kind: GraphMatrixKind) -> BoundReport {
        bounds_report(&generate(&f).unwrap(), kind, Mode::Published)
    }

    #[test]
    fn applicability() {
        use Theorem::*;
        let k4 = report(Family::Complete(4), GraphMatrixKind::Adjacency);
        assert_eq!(
            k4.applied(),
            [RegularAdjacencyTrace, RegularCommonNeighborDisks, RegularCommonNeighborOvals]
        );
        assert!(k4.skipped.iter().all(|s| s.reason == "not bipartite"));

        let c4 = report(Family::Cycle(4), GraphMatrixKind::NormalizedAdjacency);
        assert_eq!(c4.applied(), [NormalizedTrace, NormalizedBipartite]);
        assert!(c4.skipped.iter().all(|s| s.reason == "no dominating vertex"));

        let star = report(Family::Star(5), GraphMatrixKind::Laplacian);
        assert_eq!(
            star.applied(),
            [LaplacianTrace, LaplacianCommonNeighborDisks, LaplacianDominatingOvals]
        );
        assert!(star.skipped.is_empty());
    }

    #[test]
    fn every_theorem_appears_once() {
        for kind in [
            GraphMatrixKind::Adjacency,
            GraphMatrixKind::NormalizedAdjacency,
            GraphMatrixKind::Laplacian,
        ] {
            let r = report(Family::Path(5), kind);
            let mut seen: Vec<Theorem> = r.applied();
            seen.extend(r.skipped.iter().map(|s| s.theorem));
            seen.sort();
            let want: Vec<Theorem> = Theorem::ALL.into_iter().filter(|t| t.kind() == kind).collect();
            assert_eq!(seen, want);
        }
    }

    #[test]
    fn combined_is_the_intersection() {
        let r = report(Family::Complete(5), GraphMatrixKind::Laplacian);
        let combined = r.combined();
        let (_, lo, hi) = combined.iter().find(|c| c.0 == Target::Lambda1).unwrap();
        assert_eq!((*lo, *hi), (5.0, 5.0));
    }
}
