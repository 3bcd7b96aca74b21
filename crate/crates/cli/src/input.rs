//! Graph and matrix sources.

use std::fs;
use std::path::Path;

use specbound::graph::{generate, parse_edge_list, Family};
use specbound::{ComplexMatrix, Graph};

use crate::args::GraphArgs;
use crate::error::CliError;
use crate::formats::{GraphJson, MatrixJson};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Edge-list text, or graph JSON when the file starts with `{`.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    let wrap = |source| CliError::Graph {
        path: path.to_path_buf(),
        source,
    };
    if text.trim_start().starts_with('{') {
        let g: GraphJson = serde_json::from_str(&text).map_err(|source| CliError::Json {
            path: path.to_path_buf(),
            source,
        })?;
        Graph::new(g.n, g.edges.iter().map(|&[u, v]| (u, v))).map_err(wrap)
    } else {
        parse_edge_list(&text).map_err(wrap)
    }
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let text = read(path)?;
    let m: MatrixJson = serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(m.to_matrix()?)
}

impl GraphArgs {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.edges.is_some()
    }

    pub fn load(&self) -> Result<Graph, CliError> {
        match (&self.family, &self.edges) {
            (Some(_), Some(_)) => Err(CliError::Usage("give either --family or --edges, not both".into())),
            (Some(name), None) => {
                let family = Family::from_name(name, self.n, self.p, self.q, &self.connections)
                    .map_err(CliError::Family)?;
                generate(&family).map_err(CliError::Family)
            }
            (None, Some(path)) => read_graph(path),
            (None, None) => Err(CliError::Usage("no input: give --family or --edges".into())),
        }
    }
}
