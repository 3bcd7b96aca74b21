use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specbound::{GraphMatrixKind, Mode};

#[derive(Debug, Parser)]
#[command(name = "specbound", version, about = "Eigenvalue inclusion regions and spectral bounds for graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form eigenvalue bounds for one graph matrix.
    Bounds(BoundsArgs),
    /// Inclusion region of a matrix as JSON or SVG.
    Regions(RegionsArgs),
    /// Compare bounds or regions against the reference eigensolver.
    Verify(VerifyArgs),
    /// Bounds and oracle values over ranges of graph families, as CSV.
    Sweep(SweepArgs),
}

/// A named family member or an edge-list file; at most one of the two.
#[derive(Debug, Clone, Default, Args)]
pub struct GraphArgs {
    /// complete, complete_bipartite, cycle, star, path, petersen, circulant,
    /// complete_minus_edge
    #[arg(long, conflicts_with = "edges")]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Circulant connection set, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub connections: Vec<usize>,
    /// Edge-list text (`n m` header, then `u v` lines) or `{"n", "edges"}` JSON.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Adjacency,
    Laplacian,
    Normalized,
}

impl From<KindArg> for GraphMatrixKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Adjacency => GraphMatrixKind::Adjacency,
            KindArg::Laplacian => GraphMatrixKind::Laplacian,
            KindArg::Normalized => GraphMatrixKind::NormalizedAdjacency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ModeArg {
    #[default]
    Published,
    Corrected,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Published => Mode::Published,
            ModeArg::Corrected => Mode::Corrected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum VerifyFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Gersgorin,
    Brauer,
    RowsumGersgorin,
    RowsumBrauer,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Gersgorin,
        Method::Brauer,
        Method::RowsumGersgorin,
        Method::RowsumBrauer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Gersgorin => "gersgorin",
            Method::Brauer => "brauer",
            Method::RowsumGersgorin => "rowsum-gersgorin",
            Method::RowsumBrauer => "rowsum-brauer",
        }
    }

    pub fn needs_row_sum(self) -> bool {
        matches!(self, Method::RowsumGersgorin | Method::RowsumBrauer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Emit {
    #[default]
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value = "adjacency")]
    pub matrix: KindArg,
    #[arg(long, value_enum, default_value = "published")]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct RegionsArgs {
    /// Matrix JSON `{"n", "entries"}`; otherwise the graph flags select a
    /// graph matrix.
    #[arg(long, conflicts_with_all = ["family", "edges"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value = "adjacency")]
    pub matrix: KindArg,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, value_enum, default_value = "json")]
    pub emit: Emit,
    /// SVG viewport `re_min,re_max,im_min,im_max`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub window: Option<Vec<f64>>,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Matrix JSON; its inclusion regions are checked instead of bounds.
    #[arg(long, conflicts_with_all = ["family", "edges"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Restrict to one matrix kind; all three by default.
    #[arg(long, value_enum)]
    pub matrix: Option<KindArg>,
    #[arg(long, value_enum, default_value = "published")]
    pub mode: ModeArg,
    /// `all`, or a comma-separated list of theorem tags (graphs) or region
    /// methods (matrices).
    #[arg(long, default_value = "all")]
    pub scope: String,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: VerifyFormat,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Family range such as `complete:3..10`, `cycle:4..20/2`,
    /// `complete_bipartite:1..5,1..5`, `circulant:8..12;1,2` or `petersen`.
    /// Repeatable.
    #[arg(long = "family", required = true)]
    pub families: Vec<String>,
    #[arg(long, value_enum, default_value = "adjacency")]
    pub matrix: KindArg,
    #[arg(long, value_enum, default_value = "published")]
    pub mode: ModeArg,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn family_and_edges_conflict() {
        let err = Cli::try_parse_from(["specbound", "bounds", "--family", "cycle", "--n", "4", "--edges", "g.txt"])
            .unwrap_err();
        assert_eq!(err.kind(), clap::error::ErrorKind::ArgumentConflict);
    }

    #[test]
    fn negative_window() {
        let cli = Cli::try_parse_from([
            "specbound", "regions", "--family", "cycle", "--n", "4", "--method", "gersgorin", "--window", "-3,3,-1.5,1.5",
        ])
        .unwrap();
        let Command::Regions(r) = cli.command else { panic!() };
        assert_eq!(r.window, Some(vec![-3.0, 3.0, -1.5, 1.5]));
    }
}
