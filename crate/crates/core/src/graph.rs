//! Simple undirected graphs and the invariants the spectral bounds consume.
//!
//! Vertex labels are 1-based on every public entry point. Storage is
//! 0-based sorted neighbor lists.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, Zero};
use thiserror::Error;

use crate::matrix::ComplexMatrix;
use crate::Complex64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("vertex label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("common neighbors need two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based edge pairs. Duplicate edges (in either
    /// orientation) are merged; self-loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for label in [u, v] {
                if label == 0 || label > n {
                    return Err(GraphError::LabelOutOfRange { label, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u - 1, v - 1) } else { (v - 1, u - 1) };
            pairs.push((a, b));
        }
        Ok(Self::from_zero_based(n, pairs))
    }

    /// `pairs` must already be in range and loop-free.
    pub(crate) fn from_zero_based(n: usize, mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            adj,
            edges: pairs,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as 1-based pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(a, b)| (a + 1, b + 1))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacent0(u - 1, v - 1)
    }

    pub(crate) fn neighbors0(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn degree0(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub(crate) fn adjacent0(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Number of common neighbors of two distinct 0-based vertices.
    pub(crate) fn common0(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    fn check_label(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::LabelOutOfRange {
                label: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// Parses the edge-list text format: a header line `n m` followed by `m`
/// lines `u v` with 1-based labels. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let malformed = |line: usize, reason: &str| GraphError::Malformed {
        line,
        reason: reason.to_string(),
    };
    let (header_line, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| malformed(header_line, "expected `n m`"))?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = lines
            .next()
            .ok_or_else(|| malformed(header_line, "fewer edge lines than declared"))?;
        let pair = parse_pair(body).ok_or_else(|| malformed(line, "expected `u v`"))?;
        edges.push(pair);
    }
    if let Some((line, _)) = lines.next() {
        return Err(malformed(line, "more edge lines than declared"));
    }
    Graph::new(n, edges)
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Named graph families used as the test corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    /// Part X is `1..=p`, part Y is `p+1..=p+q`.
    CompleteBipartite(usize, usize),
    Cycle(usize),
    /// Vertex 1 is the center, joined to `n - 1` leaves.
    Star(usize),
    Path(usize),
    Petersen,
    /// Vertex `i` is joined to `i ± s (mod n)` for each `s` in the connection set.
    Circulant(usize, Vec<usize>),
    /// `K_n` with the edge `{1, 2}` removed.
    CompleteMinusEdge(usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Path(_) => "path",
            Family::Petersen => "petersen",
            Family::Circulant(..) => "circulant",
            Family::CompleteMinusEdge(_) => "complete_minus_edge",
        }
    }

    /// Builds a family member from its name and numeric parameters.
    /// `connections` is only read by `circulant`.
    pub fn from_name(
        name: &str,
        n: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
        connections: &[usize],
    ) -> Result<Self, GraphError> {
        let need = |family: &'static str, v: Option<usize>, what: &str| {
            v.ok_or_else(|| GraphError::InvalidParameter {
                family,
                reason: alloc::format!("missing {what}"),
            })
        };
        Ok(match name {
            "complete" => Family::Complete(need("complete", n, "n")?),
            "complete_bipartite" => Family::CompleteBipartite(
                need("complete_bipartite", p, "p")?,
                need("complete_bipartite", q, "q")?,
            ),
            "cycle" => Family::Cycle(need("cycle", n, "n")?),
            "star" => Family::Star(need("star", n, "n")?),
            "path" => Family::Path(need("path", n, "n")?),
            "petersen" => Family::Petersen,
            "circulant" => Family::Circulant(need("circulant", n, "n")?, connections.to_vec()),
            "complete_minus_edge" => {
                Family::CompleteMinusEdge(need("complete_minus_edge", n, "n")?)
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n)
            | Family::Cycle(n)
            | Family::Star(n)
            | Family::Path(n)
            | Family::CompleteMinusEdge(n) => write!(f, "{}({n})", self.name()),
            Family::CompleteBipartite(p, q) => write!(f, "complete_bipartite({p},{q})"),
            Family::Petersen => f.write_str("petersen"),
            Family::Circulant(n, s) => {
                write!(f, "circulant({n},{{")?;
                for (i, v) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("})")
            }
        }
    }
}

/// Canonical member of a family, 1-based.
pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    let invalid = |family: &'static str, reason: &str| GraphError::InvalidParameter {
        family,
        reason: reason.to_string(),
    };
    let mut pairs = Vec::new();
    let n = match *family {
        Family::Complete(n) => {
            if n < 1 {
                return Err(invalid("complete", "n must be at least 1"));
            }
            for a in 0..n {
                for b in a + 1..n {
                    pairs.push((a, b));
                }
            }
            n
        }
        Family::CompleteBipartite(p, q) => {
            if p < 1 || q < 1 {
                return Err(invalid("complete_bipartite", "p and q must be at least 1"));
            }
            for a in 0..p {
                for b in p..p + q {
                    pairs.push((a, b));
                }
            }
            p + q
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", "n must be at least 3"));
            }
            for a in 0..n {
                let b = (a + 1) % n;
                pairs.push((a.min(b), a.max(b)));
            }
            n
        }
        Family::Star(n) => {
            if n < 1 {
                return Err(invalid("star", "n must be at least 1"));
            }
            for b in 1..n {
                pairs.push((0, b));
            }
            n
        }
        Family::Path(n) => {
            if n < 1 {
                return Err(invalid("path", "n must be at least 1"));
            }
            for a in 1..n {
                pairs.push((a - 1, a));
            }
            n
        }
        Family::Petersen => {
            for a in 0..5 {
                pairs.push((a, (a + 1) % 5));
                pairs.push((a, a + 5));
                pairs.push((a + 5, (a + 2) % 5 + 5));
            }
            for p in &mut pairs {
                if p.0 > p.1 {
                    *p = (p.1, p.0);
                }
            }
            10
        }
        Family::Circulant(n, ref connections) => {
            if n < 1 {
                return Err(invalid("circulant", "n must be at least 1"));
            }
            for &s in connections {
                if s % n == 0 {
                    return Err(invalid("circulant", "connection must not be a multiple of n"));
                }
                for a in 0..n {
                    let b = (a + s) % n;
                    pairs.push((a.min(b), a.max(b)));
                }
            }
            n
        }
        Family::CompleteMinusEdge(n) => {
            if n < 2 {
                return Err(invalid("complete_minus_edge", "n must be at least 2"));
            }
            for a in 0..n {
                for b in a + 1..n {
                    if (a, b) != (0, 1) {
                        pairs.push((a, b));
                    }
                }
            }
            n
        }
    };
    Ok(Graph::from_zero_based(n, pairs))
}

#[derive(Debug, Clone, PartialEq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub average_degree: f64,
    pub sum_squares: usize,
}

impl DegreeProfile {
    /// `Σ d_i`, which is twice the edge count.
    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

pub fn degrees(g: &Graph) -> DegreeProfile {
    let degrees: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let sum: usize = degrees.iter().sum();
    DegreeProfile {
        sum_squares: degrees.iter().map(|d| d * d).sum(),
        average_degree: sum as f64 / g.n as f64,
        degrees,
    }
}

/// `|N(i) ∩ N(j)|` for distinct 1-based vertices.
pub fn common_neighbors(g: &Graph, i: usize, j: usize) -> Result<usize, GraphError> {
    g.check_label(i)?;
    g.check_label(j)?;
    if i == j {
        return Err(GraphError::SameVertex(i));
    }
    Ok(g.common0(i - 1, j - 1))
}

/// Edge counts keyed by the (sorted) degree pair of their endpoints.
fn degree_pair_counts(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    let mut counts = BTreeMap::new();
    for &(a, b) in &g.edges {
        let (da, db) = (g.degree0(a), g.degree0(b));
        *counts.entry((da.min(db), da.max(db))).or_insert(0) += 1;
    }
    counts
}

fn first_isolated(g: &Graph) -> Option<usize> {
    g.adj.iter().position(Vec::is_empty).map(|v| v + 1)
}

/// General Randić index `Σ_{i~j} (d_i d_j)^alpha`.
pub fn randic_index(g: &Graph, alpha: f64) -> Result<f64, GraphError> {
    if alpha < 0.0 {
        if let Some(v) = first_isolated(g) {
            return Err(GraphError::IsolatedVertex(v));
        }
    }
    Ok(degree_pair_counts(g)
        .into_iter()
        .map(|((a, b), count)| count as f64 * libm::pow((a * b) as f64, alpha))
        .sum())
}

/// `R_{-1}` as an exact fraction. `None` if the common denominator does not
/// fit in 128 bits or a vertex is isolated.
pub fn randic_inverse_ratio(g: &Graph) -> Option<Ratio<i128>> {
    if first_isolated(g).is_some() {
        return None;
    }
    let mut acc = Ratio::<i128>::zero();
    for ((a, b), count) in degree_pair_counts(g) {
        let term = Ratio::new(count as i128, (a * b) as i128);
        acc = acc.checked_add(&term)?;
    }
    Some(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphMatrixKind {
    Adjacency,
    Laplacian,
    NormalizedAdjacency,
}

impl GraphMatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphMatrixKind::Adjacency => "adjacency",
            GraphMatrixKind::Laplacian => "laplacian",
            GraphMatrixKind::NormalizedAdjacency => "normalized",
        }
    }
}

impl core::str::FromStr for GraphMatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adjacency" | "A" => Ok(GraphMatrixKind::Adjacency),
            "laplacian" | "L" => Ok(GraphMatrixKind::Laplacian),
            "normalized" | "normalized_adjacency" | "transition" => {
                Ok(GraphMatrixKind::NormalizedAdjacency)
            }
            other => Err(alloc::format!("unknown matrix kind `{other}`")),
        }
    }
}

/// `A`, `L = D - A`, or `D^{-1} A`, as a real-valued complex matrix.
pub fn build_matrix(g: &Graph, kind: GraphMatrixKind) -> Result<ComplexMatrix, GraphError> {
    let n = g.n;
    let mut m = ComplexMatrix::zeros(n);
    match kind {
        GraphMatrixKind::Adjacency => {
            for &(a, b) in &g.edges {
                m[(a, b)] = Complex64::new(1.0, 0.0);
                m[(b, a)] = Complex64::new(1.0, 0.0);
            }
        }
        GraphMatrixKind::Laplacian => {
            for v in 0..n {
                m[(v, v)] = Complex64::new(g.degree0(v) as f64, 0.0);
            }
            for &(a, b) in &g.edges {
                m[(a, b)] = Complex64::new(-1.0, 0.0);
                m[(b, a)] = Complex64::new(-1.0, 0.0);
            }
        }
        GraphMatrixKind::NormalizedAdjacency => {
            if let Some(v) = first_isolated(g) {
                return Err(GraphError::IsolatedVertex(v));
            }
            for v in 0..n {
                let w = 1.0 / g.degree0(v) as f64;
                for &u in g.neighbors0(v) {
                    m[(v, u)] = Complex64::new(w, 0.0);
                }
            }
        }
    }
    Ok(m)
}

/// Structural facts the bound preconditions are checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub connected: bool,
    /// Common degree when every vertex has the same degree.
    pub regular: Option<usize>,
    /// 1-based parts `(X, Y)` with vertex 1 in `X`.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    /// `(c, d)` when bipartite, both parts non-empty, every vertex of `X`
    /// has degree `c` and every vertex of `Y` has degree `d`.
    pub biregular: Option<(usize, usize)>,
    pub dominating: Vec<usize>,
}

impl StructureReport {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn classify(g: &Graph) -> StructureReport {
    let n = g.n;
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut bipartite = true;
    let mut components = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        components += 1;
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap_or(false);
            for &u in g.neighbors0(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }

    let first = g.degree0(0);
    let regular = (0..n).all(|v| g.degree0(v) == first).then_some(first);

    let bipartition = bipartite.then(|| {
        let (x, y): (Vec<usize>, Vec<usize>) =
            (1..=n).partition(|&v| color[v - 1] == Some(false));
        (x, y)
    });

    let biregular = bipartition.as_ref().and_then(|(x, y)| {
        let c = g.degree(*x.first()?);
        let d = g.degree(*y.first()?);
        let uniform =
            x.iter().all(|&v| g.degree(v) == c) && y.iter().all(|&v| g.degree(v) == d);
        uniform.then_some((c, d))
    });

    StructureReport {
        connected: components == 1,
        regular,
        bipartition,
        biregular,
        dominating: (1..=n).filter(|&v| g.degree(v) + 1 == n).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn parses_small_edge_lists() {
        let k3 = parse_edge_list("3 3\n1 2\n2 3\n1 3").unwrap();
        assert_eq!(k3, fam(Family::Complete(3)));
        let k2 = parse_edge_list("2 1\n1 2").unwrap();
        assert_eq!(k2.size(), 1);
        let c4 = parse_edge_list("4 4\n1 2\n2 3\n3 4\n4 1").unwrap();
        assert_eq!(c4, fam(Family::Cycle(4)));
    }

    #[test]
    fn parse_merges_duplicates_and_rejects_loops() {
        let g = parse_edge_list("3 3\n1 2\n2 1\n2 3\n").unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(
            parse_edge_list("3 1\n2 2"),
            Err(GraphError::SelfLoop(2))
        );
        assert_eq!(
            parse_edge_list("3 1\n1 4"),
            Err(GraphError::LabelOutOfRange { label: 4, n: 3 })
        );
        assert!(matches!(
            parse_edge_list("3 2\n1 2"),
            Err(GraphError::Malformed { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 x"),
            Err(GraphError::Malformed { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(GraphError::Malformed { .. })));
    }

    #[test]
    fn family_sizes() {
        assert_eq!(fam(Family::Complete(4)).size(), 6);
        let k22 = fam(Family::CompleteBipartite(2, 2));
        assert_eq!(k22.size(), 4);
        assert_eq!(classify(&k22).regular, Some(2));
        let circ = fam(Family::Circulant(10, vec![1, 2]));
        assert!(degrees(&circ).degrees.iter().all(|&d| d == 4));
        assert_eq!(fam(Family::Petersen).size(), 15);
        assert_eq!(fam(Family::CompleteMinusEdge(5)).size(), 9);
        assert!(generate(&Family::Cycle(2)).is_err());
        assert!(generate(&Family::CompleteBipartite(0, 3)).is_err());
        assert!(generate(&Family::Circulant(6, vec![6])).is_err());
        assert!(matches!(
            Family::from_name("wheel", Some(5), None, None, &[]),
            Err(GraphError::UnknownFamily(_))
        ));
    }

    #[test]
    fn degree_profiles() {
        let k4 = degrees(&fam(Family::Complete(4)));
        assert_eq!(k4.degrees, vec![3; 4]);
        assert_eq!(k4.average_degree, 3.0);
        assert_eq!(k4.sum_squares, 36);
        let star = degrees(&fam(Family::Star(5)));
        assert_eq!(star.degrees, vec![4, 1, 1, 1, 1]);
        assert_eq!(star.average_degree, 8.0 / 5.0);
        let pet = degrees(&fam(Family::Petersen));
        assert_eq!(pet.degrees, vec![3; 10]);
        assert_eq!(pet.sum_squares, 90);
    }

    #[test]
    fn common_neighbor_counts() {
        let k4 = fam(Family::Complete(4));
        assert_eq!(common_neighbors(&k4, 1, 2), Ok(2));
        let c4 = fam(Family::Cycle(4));
        assert_eq!(common_neighbors(&c4, 1, 3), Ok(2));
        let pet = fam(Family::Petersen);
        for u in 1..=10 {
            for v in 1..=10 {
                if u == v {
                    continue;
                }
                let expected = if pet.is_adjacent(u, v) { 0 } else { 1 };
                assert_eq!(common_neighbors(&pet, u, v), Ok(expected));
            }
        }
        assert_eq!(common_neighbors(&k4, 2, 2), Err(GraphError::SameVertex(2)));
        assert!(common_neighbors(&k4, 0, 2).is_err());
    }

    #[test]
    fn randic_values() {
        let k4 = fam(Family::Complete(4));
        assert!((randic_index(&k4, -1.0).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(randic_index(&fam(Family::Petersen), 0.0).unwrap(), 15.0);
        assert!((randic_index(&fam(Family::Star(6)), -1.0).unwrap() - 1.0).abs() < 1e-12);
        let isolated = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(randic_index(&isolated, -1.0), Err(GraphError::IsolatedVertex(3)));
        assert_eq!(randic_index(&isolated, 1.0), Ok(1.0));
        assert_eq!(randic_inverse_ratio(&k4), Some(Ratio::new(2, 3)));
        assert_eq!(
            randic_inverse_ratio(&fam(Family::CompleteBipartite(3, 5))),
            Some(Ratio::from_integer(1))
        );
    }

    #[test]
    fn graph_matrices() {
        let k2 = fam(Family::Complete(2));
        let l = build_matrix(&k2, GraphMatrixKind::Laplacian).unwrap();
        assert_eq!(l.re_rows(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        let t = build_matrix(&fam(Family::Complete(3)), GraphMatrixKind::NormalizedAdjacency)
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 0.0 } else { 0.5 };
                assert_eq!(t[(i, j)], Complex64::new(want, 0.0));
            }
        }
        let a = build_matrix(&fam(Family::Cycle(4)), GraphMatrixKind::Adjacency).unwrap();
        assert_eq!(a.re_rows()[0], vec![0.0, 1.0, 0.0, 1.0]);
        let isolated = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(
            build_matrix(&isolated, GraphMatrixKind::NormalizedAdjacency),
            Err(GraphError::IsolatedVertex(3))
        );
    }

    #[test]
    fn classification() {
        let k4 = classify(&fam(Family::Complete(4)));
        assert!(k4.connected);
        assert_eq!(k4.regular, Some(3));
        assert!(!k4.is_bipartite());
        assert_eq!(k4.dominating, vec![1, 2, 3, 4]);

        let k23 = classify(&fam(Family::CompleteBipartite(2, 3)));
        assert!(k23.connected);
        assert_eq!(k23.biregular, Some((3, 2)));
        assert_eq!(k23.bipartition, Some((vec![1, 2], vec![3, 4, 5])));
        assert!(k23.dominating.is_empty());

        let star = classify(&fam(Family::Star(5)));
        assert_eq!(star.biregular, Some((4, 1)));
        assert_eq!(star.dominating, vec![1]);

        let split = classify(&Graph::new(4, [(1, 2), (3, 4)]).unwrap());
        assert!(!split.connected);
    }
}
