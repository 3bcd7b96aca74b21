//! JSON and CSV shapes of graphs, matrices, regions, spectra and reports.
//!
//! Non-finite bound ends serialize as `null` in JSON and as `inf`/`-inf`
//! in CSV.

use serde::{Deserialize, Serialize};
use specbound::bounds::{BoundReport, Verdict};
use specbound::{CassiniOval, Complex64, ComplexMatrix, Disk, Graph, MatrixError, Region, Spectrum};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryJson {
    pub re: f64,
    pub im: f64,
}

/// Row-major `n × n` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixJson {
            n: m.dim(),
            entries: m
                .rows()
                .map(|row| row.iter().map(|z| EntryJson { re: z.re, im: z.im }).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, MatrixError> {
        if self.entries.len() != self.n {
            return Err(MatrixError::NotSquare {
                row: self.entries.len(),
                len: self.entries.len(),
                n: self.n,
            });
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| Complex64::new(e.re, e.im)).collect())
            .collect();
        ComplexMatrix::from_rows(rows)
    }
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn point([re, im]: [f64; 2]) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskJson {
    pub center: [f64; 2],
    pub radius: f64,
}

/// `|z - a||z - b| <= p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OvalJson {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpJson {
    Union,
    Intersection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RegionJson {
    Disk { disk: DiskJson },
    Oval { oval: OvalJson },
    Points { points: Vec<[f64; 2]> },
    Node { op: OpJson, children: Vec<RegionJson> },
}

impl RegionJson {
    pub fn from_region(r: &Region) -> Self {
        match r {
            Region::Disk(d) => RegionJson::Disk {
                disk: DiskJson {
                    center: pair(d.center),
                    radius: d.radius,
                },
            },
            Region::Oval(o) => RegionJson::Oval {
                oval: OvalJson {
                    a: pair(o.focus_a),
                    b: pair(o.focus_b),
                    p: o.radius_product,
                },
            },
            Region::Points(ps) => RegionJson::Points {
                points: ps.iter().copied().map(pair).collect(),
            },
            Region::Union(c) => RegionJson::Node {
                op: OpJson::Union,
                children: c.iter().map(RegionJson::from_region).collect(),
            },
            Region::Intersection(c) => RegionJson::Node {
                op: OpJson::Intersection,
                children: c.iter().map(RegionJson::from_region).collect(),
            },
        }
    }

    /// Rebuilds the region; negative radii and products are rejected.
    pub fn to_region(&self) -> Result<Region, String> {
        Ok(match self {
            RegionJson::Disk { disk } => {
                if !(disk.radius >= 0.0) {
                    return Err(format!("disk radius {} is negative", disk.radius));
                }
                Region::Disk(Disk::new(point(disk.center), disk.radius))
            }
            RegionJson::Oval { oval } => {
                if !(oval.p >= 0.0) {
                    return Err(format!("oval product {} is negative", oval.p));
                }
                Region::Oval(CassiniOval::new(point(oval.a), point(oval.b), oval.p))
            }
            RegionJson::Points { points } => Region::Points(points.iter().copied().map(point).collect()),
            RegionJson::Node { op, children } => {
                let c = children.iter().map(RegionJson::to_region).collect::<Result<Vec<_>, _>>()?;
                match op {
                    OpJson::Union => Region::Union(c),
                    OpJson::Intersection => Region::Intersection(c),
                }
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub values: Vec<[f64; 2]>,
    pub residual: f64,
}

impl SpectrumJson {
    pub fn from_spectrum(s: &Spectrum) -> Self {
        SpectrumJson {
            values: s.values.iter().copied().map(pair).collect(),
            residual: s.max_residual,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SummaryJson {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub dominating: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct BoundJson {
    pub target: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias: Option<&'static str>,
    pub lower: f64,
    pub upper: f64,
    pub theorem: &'static str,
    pub assumptions: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct SkippedJson {
    pub theorem: &'static str,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct CombinedJson {
    pub target: &'static str,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub graph: SummaryJson,
    pub matrix: &'static str,
    pub mode: &'static str,
    pub bounds: Vec<BoundJson>,
    pub skipped: Vec<SkippedJson>,
    pub combined: Vec<CombinedJson>,
}

impl ReportJson {
    pub fn from_report(r: &BoundReport) -> Self {
        ReportJson {
            graph: SummaryJson {
                n: r.graph.n,
                edges: r.graph.edges,
                connected: r.graph.connected,
                regular: r.graph.regular,
                bipartite: r.graph.bipartite,
                dominating: r.graph.dominating.clone(),
            },
            matrix: r.kind.as_str(),
            mode: r.mode.as_str(),
            bounds: r
                .bounds
                .iter()
                .map(|b| BoundJson {
                    target: b.target.label(),
                    alias: b.target.alias(r.kind),
                    lower: b.lower,
                    upper: b.upper,
                    theorem: b.theorem.tag(),
                    assumptions: b.assumptions.clone(),
                })
                .collect(),
            skipped: r
                .skipped
                .iter()
                .map(|s| SkippedJson {
                    theorem: s.theorem.tag(),
                    reason: s.reason.clone(),
                })
                .collect(),
            combined: r
                .combined()
                .into_iter()
                .map(|(t, lower, upper)| CombinedJson {
                    target: t.label(),
                    lower,
                    upper,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundRow {
    pub theorem: &'static str,
    pub target: &'static str,
    pub lower: f64,
    pub upper: f64,
}

/// One oracle comparison, as written by `verify --format json`.
#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub check: String,
    pub target: Option<&'static str>,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub oracle: Option<f64>,
    pub slack: f64,
    pub pass: bool,
}

impl CheckJson {
    pub fn from_verdict(v: &Verdict, tol: f64) -> Self {
        CheckJson {
            check: v.theorem.tag().to_string(),
            target: Some(v.target.label()),
            lower: Some(v.lower),
            upper: Some(v.upper),
            oracle: Some(v.oracle),
            slack: v.slack(),
            pass: v.passes(tol),
        }
    }
}
