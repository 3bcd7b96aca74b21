#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use specbound::bounds::{check_against, Verdict};
use specbound::graph::{generate, Family};
use specbound::oracle::graph_spectrum;
use specbound::{bounds_report, CassiniOval, Complex64, ComplexMatrix, Disk, Graph, GraphMatrixKind, Mode, Region};

pub const KINDS: [GraphMatrixKind; 3] = [
    GraphMatrixKind::Adjacency,
    GraphMatrixKind::NormalizedAdjacency,
    GraphMatrixKind::Laplacian,
];

/// Named families up to `max_n` vertices.
pub fn named_corpus(max_n: usize) -> Vec<(Family, Graph)> {
    let mut fams = Vec::new();
    for n in 2..=max_n {
        fams.push(Family::Complete(n));
        fams.push(Family::Path(n));
        fams.push(Family::Star(n));
        fams.push(Family::CompleteMinusEdge(n));
        if n >= 3 {
            fams.push(Family::Cycle(n));
        }
        if n >= 5 {
            fams.push(Family::Circulant(n, vec![1, 2]));
        }
        if n >= 7 {
            fams.push(Family::Circulant(n, vec![1, 3]));
        }
    }
    for p in 1..=max_n / 2 {
        for q in p..=max_n - p {
            fams.push(Family::CompleteBipartite(p, q));
        }
    }
    if max_n >= 10 {
        fams.push(Family::Petersen);
    }
    fams.into_iter()
        .map(|f| {
            let g = generate(&f).unwrap();
            (f, g)
        })
        .collect()
}

/// Connected graph on `n` vertices: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push((rng.random_range(1..v), v));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random_bool(extra) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Adds a dominating vertex `n + 1` to a random graph on `n` vertices.
pub fn random_with_hub(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|v| (v, n + 1)).collect();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n + 1, edges).unwrap()
}

pub fn oracle_verdicts(g: &Graph, kind: GraphMatrixKind, mode: Mode) -> Vec<Verdict> {
    let report = bounds_report(g, kind, mode);
    if report.bounds.is_empty() {
        return Vec::new();
    }
    let spectrum = graph_spectrum(g, kind, 1e-13).unwrap();
    check_against(&report.bounds, &spectrum)
}

/// Entries uniform in the unit square, with the last column adjusted so
/// every row sums to `gamma`.
pub fn random_constant_row_sum(rng: &mut ChaCha8Rng, n: usize, gamma: Complex64) -> ComplexMatrix {
    let rows = (0..n)
        .map(|_| {
            let mut row: Vec<Complex64> = (0..n)
                .map(|_| Complex64::new(rng.random::<f64>(), rng.random::<f64>()))
                .collect();
            let partial: Complex64 = row[..n - 1].iter().sum();
            row[n - 1] = gamma - partial;
            row
        })
        .collect();
    ComplexMatrix::from_rows(rows).unwrap()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> ComplexMatrix {
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    Complex64::new(
                        scale * (2.0 * rng.random::<f64>() - 1.0),
                        scale * (2.0 * rng.random::<f64>() - 1.0),
                    )
                })
                .collect()
        })
        .collect();
    ComplexMatrix::from_rows(rows).unwrap()
}

/// Monic `(x - root) · p`, lowest degree first.
pub fn times_linear(p: &[Complex64], root: Complex64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); p.len() + 1];
    for (k, &c) in p.iter().enumerate() {
        out[k + 1] += c;
        out[k] -= c * root;
    }
    out
}

/// One to four disks and ovals with centres near the real axis, combined by
/// a random union or intersection.
pub fn random_region(rng: &mut ChaCha8Rng) -> Region {
    let point = |rng: &mut ChaCha8Rng| Complex64::new(4.0 * rng.random::<f64>() - 2.0, 2.0 * rng.random::<f64>() - 1.0);
    let count = rng.random_range(1..=4);
    let leaves: Vec<Region> = (0..count)
        .map(|_| {
            if rng.random_bool(0.5) {
                let center = point(rng);
                Region::Disk(Disk::new(center, 2.0 * rng.random::<f64>()))
            } else {
                let (a, b) = (point(rng), point(rng));
                Region::Oval(CassiniOval::new(a, b, 3.0 * rng.random::<f64>()))
            }
        })
        .collect();
    if rng.random_bool(0.5) {
        Region::Union(leaves)
    } else {
        Region::Intersection(leaves)
    }
}
