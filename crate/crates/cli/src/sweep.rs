//! Family-range grammar and sweep rows.
//!
//! ```text
//! term   := name [":" params]
//! params := range                      complete, cycle, star, path, complete_minus_edge
//!         | range "," range            complete_bipartite
//!         | range ";" s1 "," s2 ...    circulant
//! range  := a | a ".." b | a ".." b "/" step      (inclusive)
//! ```

use serde::Serialize;
use specbound::bounds::check_against;
use specbound::graph::{generate, Family};
use specbound::oracle::graph_spectrum;
use specbound::{bounds_report, GraphMatrixKind, Mode};

use crate::error::CliError;

fn parse_range(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad range `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (span, step) = match text.split_once('/') {
        Some((span, step)) => (span, num(step)?),
        None => (text, 1),
    };
    if step == 0 {
        return Err(bad());
    }
    let (lo, hi) = match span.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let v = num(span)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).step_by(step).collect())
}

pub fn parse_family_term(term: &str) -> Result<Vec<Family>, CliError> {
    let (name, params) = match term.split_once(':') {
        Some((name, params)) => (name.trim(), Some(params.trim())),
        None => (term.trim(), None),
    };
    let need = || {
        params.ok_or_else(|| CliError::Usage(format!("`{name}` needs a parameter range, e.g. `{name}:3..10`")))
    };
    let build = |n: Option<usize>, p: Option<usize>, q: Option<usize>, s: &[usize]| {
        Family::from_name(name, n, p, q, s).map_err(CliError::Family)
    };
    match name {
        "petersen" => Ok(vec![Family::Petersen]),
        "complete_bipartite" => {
            let params = need()?;
            let (ps, qs) = params
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("`{term}`: expected p-range,q-range")))?;
            let (ps, qs) = (parse_range(ps)?, parse_range(qs)?);
            ps.iter()
                .flat_map(|&p| qs.iter().map(move |&q| (p, q)))
                .map(|(p, q)| build(None, Some(p), Some(q), &[]))
                .collect()
        }
        "circulant" => {
            let params = need()?;
            let (ns, set) = params
                .split_once(';')
                .ok_or_else(|| CliError::Usage(format!("`{term}`: expected n-range;s1,s2,...")))?;
            let set = set
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage(format!("`{term}`: bad connection set")))?;
            parse_range(ns)?.into_iter().map(|n| build(Some(n), None, None, &set)).collect()
        }
        _ => parse_range(need()?)?
            .into_iter()
            .map(|n| build(Some(n), None, None, &[]))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    pub theorem: &'static str,
    pub target: &'static str,
    pub lower: f64,
    pub upper: f64,
    pub oracle: f64,
    pub slack_lower: f64,
    pub slack_upper: f64,
}

/// Rows in term order, then family order, then report order. Graphs with
/// no applicable theorem contribute nothing.
pub fn sweep_rows(terms: &[String], kind: GraphMatrixKind, mode: Mode) -> Result<Vec<SweepRow>, CliError> {
    let mut rows = Vec::new();
    for term in terms {
        for family in parse_family_term(term)? {
            let g = generate(&family).map_err(CliError::Family)?;
            let report = bounds_report(&g, kind, mode);
            if report.bounds.is_empty() {
                continue;
            }
            let spectrum = graph_spectrum(&g, kind, 1e-13)?;
            let label = family.to_string();
            rows.extend(check_against(&report.bounds, &spectrum).into_iter().map(|v| SweepRow {
                family: label.clone(),
                n: g.order(),
                theorem: v.theorem.tag(),
                target: v.target.label(),
                lower: v.lower,
                upper: v.upper,
                oracle: v.oracle,
                slack_lower: v.slack_lower,
                slack_upper: v.slack_upper,
            }));
        }
    }
    Ok(rows)
}
