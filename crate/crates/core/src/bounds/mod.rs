//! Closed-form eigenvalue bounds for graph matrices.
//!
//! Every bound is a pure function of a [`Graph`] returning labelled
//! intervals. Each one refuses to run unless its structural preconditions
//! hold, as reported by [`classify`](crate::graph::classify).
//!
//! Radicands are formed in exact integer or rational arithmetic wherever the
//! inputs are combinatorial, so equality cases collapse to exactly zero
//! width rather than to rounding noise.

mod adjacency;
mod laplacian;
mod normalized;
mod report;
mod trace;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphMatrixKind, StructureReport};

pub use adjacency::{
    biregular_bipartite_lambda2_bounds, regular_adjacency_bounds,
    regular_bipartite_lambda2_bounds, regular_brauer_common_neighbor_bounds,
    regular_common_neighbor_bounds,
};
pub use laplacian::{
    laplacian_common_neighbor_bounds, laplacian_dominating_brauer_bounds, laplacian_trace_bounds,
};
pub use normalized::{
    normalized_bipartite_lambda2_bounds, normalized_dominating_brauer_bounds,
    normalized_dominating_gersgorin_bounds, normalized_trace_bounds,
};
pub use report::{
    bounds_report, check_against, evaluate, BoundReport, GraphSummary, Skipped, Verdict,
};
pub use trace::{trace_bounds, TraceStats, TRACE_BOUND_TAG};

/// Radicands in `[-RADICAND_CLAMP, 0)` are treated as zero.
pub const RADICAND_CLAMP: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("{theorem}: {reason}")]
    Precondition { theorem: Theorem, reason: String },
    #[error("{theorem}: negative radicand {value:e}")]
    NegativeRadicand { theorem: Theorem, value: f64 },
    #[error("trace bounds need at least 2 eigenvalues, got {0}")]
    TraceDimension(usize),
    #[error("power sums are inconsistent with a real spectrum (variance {variance:e})")]
    InconsistentMoments { variance: f64 },
}

/// Which eigenvalue an interval refers to, under `λ_1 ≥ … ≥ λ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Lambda1,
    Lambda2,
    LambdaNMinus1,
    LambdaN,
}

impl Target {
    pub const ALL: [Target; 4] = [
        Target::Lambda1,
        Target::Lambda2,
        Target::LambdaNMinus1,
        Target::LambdaN,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Target::Lambda1 => "lambda_1",
            Target::Lambda2 => "lambda_2",
            Target::LambdaNMinus1 => "lambda_{n-1}",
            Target::LambdaN => "lambda_n",
        }
    }

    /// Alternative name under a given matrix kind, if any.
    pub fn alias(self, kind: GraphMatrixKind) -> Option<&'static str> {
        match (self, kind) {
            (Target::LambdaNMinus1, GraphMatrixKind::Laplacian) => Some("algebraic_connectivity"),
            _ => None,
        }
    }

    /// 1-based position in the descending order of an `n`-point spectrum.
    pub fn index(self, n: usize) -> usize {
        match self {
            Target::Lambda1 => 1,
            Target::Lambda2 => 2,
            Target::LambdaNMinus1 => n - 1,
            Target::LambdaN => n,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lambda_1" => Ok(Target::Lambda1),
            "lambda_2" => Ok(Target::Lambda2),
            "lambda_{n-1}" | "algebraic_connectivity" => Ok(Target::LambdaNMinus1),
            "lambda_n" => Ok(Target::LambdaN),
            other => Err(alloc::format!("unknown eigenvalue label `{other}`")),
        }
    }
}

/// The closed-form bounds, named by the structure they exploit.
///
/// [`Theorem::tag`] gives the stable identifier used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    RegularAdjacencyTrace,
    BiregularBipartite,
    RegularBipartite,
    RegularCommonNeighborDisks,
    RegularCommonNeighborOvals,
    NormalizedTrace,
    NormalizedBipartite,
    NormalizedDominatingDisks,
    NormalizedDominatingOvals,
    LaplacianTrace,
    LaplacianCommonNeighborDisks,
    LaplacianDominatingOvals,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::RegularAdjacencyTrace,
        Theorem::BiregularBipartite,
        Theorem::RegularBipartite,
        Theorem::RegularCommonNeighborDisks,
        Theorem::RegularCommonNeighborOvals,
        Theorem::NormalizedTrace,
        Theorem::NormalizedBipartite,
        Theorem::NormalizedDominatingDisks,
        Theorem::NormalizedDominatingOvals,
        Theorem::LaplacianTrace,
        Theorem::LaplacianCommonNeighborDisks,
        Theorem::LaplacianDominatingOvals,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::RegularAdjacencyTrace => "Thm3.1",
            Theorem::BiregularBipartite => "Thm3.4",
            Theorem::RegularBipartite => "Cor3.6",
            Theorem::RegularCommonNeighborDisks => "Thm3.7",
            Theorem::RegularCommonNeighborOvals => "Thm3.9",
            Theorem::NormalizedTrace => "Thm4.1",
            Theorem::NormalizedBipartite => "Thm4.3",
            Theorem::NormalizedDominatingDisks => "Thm4.4",
            Theorem::NormalizedDominatingOvals => "Thm4.5",
            Theorem::LaplacianTrace => "Thm5.2",
            Theorem::LaplacianCommonNeighborDisks => "Thm5.3",
            Theorem::LaplacianDominatingOvals => "Thm5.4",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.tag() == tag)
    }

    /// The matrix whose spectrum the bound constrains.
    pub fn kind(self) -> GraphMatrixKind {
        use Theorem::*;
        match self {
            RegularAdjacencyTrace
            | BiregularBipartite
            | RegularBipartite
            | RegularCommonNeighborDisks
            | RegularCommonNeighborOvals => GraphMatrixKind::Adjacency,
            NormalizedTrace
            | NormalizedBipartite
            | NormalizedDominatingDisks
            | NormalizedDominatingOvals => GraphMatrixKind::NormalizedAdjacency,
            LaplacianTrace | LaplacianCommonNeighborDisks | LaplacianDominatingOvals => {
                GraphMatrixKind::Laplacian
            }
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Variant of the dominating-vertex Laplacian oval bound.
///
/// `Published` uses the deleted row sum `n - d_k`; `Corrected` uses the
/// exact value `n - 1 - d_k`. Both are valid; the second is never weaker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Published,
    Corrected,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Published => "published",
            Mode::Corrected => "corrected",
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "published" => Ok(Mode::Published),
            "corrected" => Ok(Mode::Corrected),
            other => Err(alloc::format!("unknown mode `{other}`")),
        }
    }
}

/// `lower ≤ λ_target ≤ upper`; one-sided bounds use an infinite end.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundInterval {
    pub target: Target,
    pub lower: f64,
    pub upper: f64,
    pub theorem: Theorem,
    pub assumptions: Vec<String>,
}

impl BoundInterval {
    /// Signed distances of `value` inside each end; negative means outside.
    pub fn slack(&self, value: f64) -> (f64, f64) {
        (value - self.lower, self.upper - value)
    }

    pub fn contains(&self, value: f64, tol: f64) -> bool {
        let (lo, hi) = self.slack(value);
        lo >= -tol && hi >= -tol
    }
}

pub(crate) struct Ctx<'g> {
    pub g: &'g Graph,
    pub s: StructureReport,
    pub theorem: Theorem,
    pub assumptions: Vec<String>,
}

impl<'g> Ctx<'g> {
    pub fn new(g: &'g Graph, theorem: Theorem) -> Self {
        Self::with_structure(g, crate::graph::classify(g), theorem)
    }

    pub fn with_structure(g: &'g Graph, s: StructureReport, theorem: Theorem) -> Self {
        Ctx {
            g,
            s,
            theorem,
            assumptions: Vec::new(),
        }
    }

    fn fail(&self, reason: impl Into<String>) -> BoundError {
        BoundError::Precondition {
            theorem: self.theorem,
            reason: reason.into(),
        }
    }

    pub fn connected(&mut self) -> Result<(), BoundError> {
        if !self.s.connected {
            return Err(self.fail("not connected"));
        }
        self.assumptions.push("connected".into());
        Ok(())
    }

    pub fn min_order(&mut self, min: usize) -> Result<usize, BoundError> {
        let n = self.g.order();
        if n < min {
            return Err(self.fail(alloc::format!("needs n >= {min}")));
        }
        self.assumptions.push(alloc::format!("n >= {min}"));
        Ok(n)
    }

    pub fn regular(&mut self) -> Result<usize, BoundError> {
        let d = self.s.regular.ok_or_else(|| self.fail("not regular"))?;
        self.assumptions.push(alloc::format!("{d}-regular"));
        Ok(d)
    }

    pub fn bipartite(&mut self) -> Result<(), BoundError> {
        if !self.s.is_bipartite() {
            return Err(self.fail("not bipartite"));
        }
        self.assumptions.push("bipartite".into());
        Ok(())
    }

    pub fn biregular(&mut self) -> Result<(usize, usize), BoundError> {
        self.bipartite()?;
        let (c, d) = self.s.biregular.ok_or_else(|| self.fail("not biregular"))?;
        self.assumptions.push(alloc::format!("({c},{d})-biregular"));
        Ok((c, d))
    }

    pub fn dominating(&mut self) -> Result<Vec<usize>, BoundError> {
        if self.s.dominating.is_empty() {
            return Err(self.fail("no dominating vertex"));
        }
        let list: Vec<String> = self
            .s
            .dominating
            .iter()
            .map(|v| alloc::format!("{v}"))
            .collect();
        self.assumptions
            .push(alloc::format!("dominating vertex {}", list.join(",")));
        Ok(self.s.dominating.iter().map(|v| v - 1).collect())
    }

    /// Square root of a computed radicand, with the shared clamp.
    pub fn sqrt(&self, x: f64) -> Result<f64, BoundError> {
        if x >= 0.0 {
            Ok(libm::sqrt(x))
        } else if x >= -RADICAND_CLAMP {
            Ok(0.0)
        } else {
            Err(BoundError::NegativeRadicand {
                theorem: self.theorem,
                value: x,
            })
        }
    }

    pub fn interval(&self, target: Target, lower: f64, upper: f64) -> BoundInterval {
        BoundInterval {
            target,
            lower,
            upper,
            theorem: self.theorem,
            assumptions: self.assumptions.clone(),
        }
    }
}

/// `p / q` as a float for integer inputs formed exactly.
pub(crate) fn ratio(p: i128, q: i128) -> f64 {
    p as f64 / q as f64
}
