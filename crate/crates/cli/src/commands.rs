use std::fs;
use std::path::Path;

use specbound::bounds::{check_against, Verdict};
use specbound::oracle::{complex_eigenvalues, graph_spectrum};
use specbound::region::{brauer_region, gersgorin_region, rowsum_brauer_region, rowsum_gersgorin_region};
use specbound::{bounds_report, graph::build_matrix, ComplexMatrix, GraphMatrixKind, Mode, Region, Theorem};

use crate::args::{
    BoundsArgs, Cli, Command, Emit, Method, RegionsArgs, ReportFormat, SweepArgs, VerifyArgs, VerifyFormat,
};
use crate::error::CliError;
use crate::formats::{BoundRow, CheckJson, RegionJson, ReportJson, SpectrumJson};
use crate::input::read_matrix;
use crate::svg::{self, Window};
use crate::sweep::sweep_rows;

/// Exit codes besides the error codes of [`CliError::exit_code`].
pub const EXIT_NOTHING_APPLIES: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 4;

/// Standard-output text and exit code of a successful run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Bounds(a) => bounds(a),
        Command::Regions(a) => regions(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_text<T: serde::Serialize>(rows: &[T], header: &[&str]) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn bounds(a: &BoundsArgs) -> Result<Output, CliError> {
    let g = a.graph.load()?;
    let report = bounds_report(&g, a.matrix.into(), a.mode.into());
    let stdout = match a.format {
        ReportFormat::Json => json(&ReportJson::from_report(&report)),
        ReportFormat::Csv => {
            let rows: Vec<BoundRow> = report
                .bounds
                .iter()
                .map(|b| BoundRow {
                    theorem: b.theorem.tag(),
                    target: b.target.label(),
                    lower: b.lower,
                    upper: b.upper,
                })
                .collect();
            csv_text(&rows, &["theorem", "target", "lower", "upper"])?
        }
    };
    let code = if report.bounds.is_empty() { EXIT_NOTHING_APPLIES } else { 0 };
    Ok(Output { stdout, code })
}

pub fn build_region(m: &ComplexMatrix, method: Method) -> Result<Region, CliError> {
    Ok(match method {
        Method::Gersgorin => gersgorin_region(m),
        Method::Brauer => brauer_region(m)?,
        Method::RowsumGersgorin => rowsum_gersgorin_region(m)?,
        Method::RowsumBrauer => rowsum_brauer_region(m)?,
    })
}

fn source_matrix(input: Option<&Path>, graph: &crate::args::GraphArgs, kind: GraphMatrixKind) -> Result<ComplexMatrix, CliError> {
    match input {
        Some(path) => read_matrix(path),
        None => {
            let g = graph.load()?;
            build_matrix(&g, kind).map_err(CliError::Family)
        }
    }
}

pub fn regions(a: &RegionsArgs) -> Result<Output, CliError> {
    let m = source_matrix(a.input.as_deref(), &a.graph, a.matrix.into())?;
    let region = build_region(&m, a.method)?;
    let text = match a.emit {
        Emit::Json => json(&RegionJson::from_region(&region)),
        Emit::Svg => {
            let spectrum = complex_eigenvalues(&m, 1e-12)?;
            let window = match &a.window {
                Some(v) => Window::from_slice(v).map_err(CliError::Usage)?,
                None => Window::fit(&region, &spectrum.values),
            };
            svg::render(&region, &spectrum.values, window)
        }
    };
    match &a.out {
        Some(path) => {
            write_out(path, &text)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

/// One PASS/FAIL line per verdict; returns the lines and the failure count.
pub fn verdict_lines(kind: GraphMatrixKind, verdicts: &[Verdict], tol: f64) -> (Vec<String>, usize) {
    let mut failed = 0;
    let lines = verdicts
        .iter()
        .map(|v| {
            let pass = v.passes(tol);
            failed += usize::from(!pass);
            format!(
                "{} {} {} {}: [{}, {}] oracle {} slack {:e}",
                if pass { "PASS" } else { "FAIL" },
                kind.as_str(),
                v.theorem.tag(),
                v.target.label(),
                v.lower,
                v.upper,
                v.oracle,
                v.slack()
            )
        })
        .collect();
    (lines, failed)
}

fn scope_list(scope: &str) -> Option<Vec<&str>> {
    (scope.trim() != "all").then(|| scope.split(',').map(str::trim).filter(|s| !s.is_empty()).collect())
}

#[derive(serde::Serialize)]
struct VerifyJson {
    checks: Vec<CheckJson>,
    spectra: Vec<(String, SpectrumJson)>,
    failed: usize,
}

pub fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let scope = scope_list(&a.scope);
    let mut lines = Vec::new();
    let mut checks = Vec::new();
    let mut spectra = Vec::new();
    let mut failed = 0;

    if let Some(path) = &a.input {
        let m = read_matrix(path)?;
        let methods: Vec<Method> = match &scope {
            None => Method::ALL.to_vec(),
            Some(names) => names
                .iter()
                .map(|s| {
                    Method::ALL
                        .into_iter()
                        .find(|m| m.name() == *s)
                        .ok_or_else(|| CliError::Usage(format!("unknown region method `{s}`")))
                })
                .collect::<Result<_, _>>()?,
        };
        let spectrum = complex_eigenvalues(&m, 1e-12)?;
        let has_row_sum = m.constant_row_sum(m.default_row_sum_tolerance()).is_some();
        for method in methods {
            if method.needs_row_sum() && !has_row_sum {
                lines.push(format!("SKIP {}: row sums are not constant", method.name()));
                continue;
            }
            let region = match build_region(&m, method) {
                Ok(r) => r,
                Err(CliError::Matrix(e)) => {
                    lines.push(format!("SKIP {}: {e}", method.name()));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let slack = spectrum
                .values
                .iter()
                .map(|&z| region.slack(z))
                .fold(f64::INFINITY, f64::min);
            let pass = slack >= -a.tol;
            failed += usize::from(!pass);
            lines.push(format!(
                "{} {}: {} eigenvalues, min slack {slack:e}",
                if pass { "PASS" } else { "FAIL" },
                method.name(),
                spectrum.len()
            ));
            checks.push(CheckJson {
                check: method.name().to_string(),
                target: None,
                lower: None,
                upper: None,
                oracle: None,
                slack,
                pass,
            });
        }
        spectra.push(("matrix".to_string(), SpectrumJson::from_spectrum(&spectrum)));
    } else {
        let g = a.graph.load()?;
        let wanted: Option<Vec<Theorem>> = scope
            .map(|tags| {
                tags.iter()
                    .map(|t| Theorem::from_tag(t).ok_or_else(|| CliError::Usage(format!("unknown theorem `{t}`"))))
                    .collect::<Result<_, _>>()
            })
            .transpose()?;
        let kinds: Vec<GraphMatrixKind> = match a.matrix {
            Some(k) => vec![k.into()],
            None => vec![
                GraphMatrixKind::Adjacency,
                GraphMatrixKind::NormalizedAdjacency,
                GraphMatrixKind::Laplacian,
            ],
        };
        let mode: Mode = a.mode.into();
        for kind in kinds {
            let report = bounds_report(&g, kind, mode);
            let bounds: Vec<_> = report
                .bounds
                .into_iter()
                .filter(|b| wanted.as_ref().is_none_or(|w| w.contains(&b.theorem)))
                .collect();
            if bounds.is_empty() {
                continue;
            }
            let spectrum = graph_spectrum(&g, kind, 1e-13)?;
            let verdicts = check_against(&bounds, &spectrum);
            let (mut l, f) = verdict_lines(kind, &verdicts, a.tol);
            lines.append(&mut l);
            failed += f;
            checks.extend(verdicts.iter().map(|v| CheckJson::from_verdict(v, a.tol)));
            spectra.push((kind.as_str().to_string(), SpectrumJson::from_spectrum(&spectrum)));
        }
    }

    let total = checks.len();
    let stdout = match a.format {
        VerifyFormat::Text => {
            if total == 0 {
                lines.push("no applicable checks".into());
            }
            lines.push(format!("{} passed, {failed} failed", total - failed));
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
        VerifyFormat::Json => json(&VerifyJson { checks, spectra, failed }),
    };
    let code = if failed > 0 { EXIT_CHECK_FAILED } else { 0 };
    Ok(Output { stdout, code })
}

pub const SWEEP_HEADER: [&str; 9] = [
    "family",
    "n",
    "theorem",
    "target",
    "lower",
    "upper",
    "oracle",
    "slack_lower",
    "slack_upper",
];

pub fn sweep(a: &SweepArgs) -> Result<Output, CliError> {
    let rows = sweep_rows(&a.families, a.matrix.into(), a.mode.into())?;
    let text = csv_text(&rows, &SWEEP_HEADER)?;
    match &a.out {
        Some(path) => {
            write_out(path, &text)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}
