//! Eigenvalue inclusion regions in the complex plane.
//!
//! A [`Region`] is kept symbolically as a small tree of disks, Cassini ovals
//! and finite point sets joined by unions and intersections. Membership and
//! real-axis sections are evaluated from the parameters; nothing is ever
//! rasterized.
//!
//! Four constructions are provided:
//!
//! * [`gersgorin_region`]: union of the row disks `|z - a_ii| <= r_i(A)`.
//! * [`brauer_region`]: union of the ovals `|z - a_ii||z - a_jj| <= r_i r_j`.
//! * [`rowsum_gersgorin_region`]: for constant row sum `γ`, the
//!   intersection over `i` of the Geršgorin regions of the deflations `A(i)`,
//!   each united with `{γ}`.
//! * [`rowsum_brauer_region`]: the same with Brauer ovals of `A(i)`.
//!
//! The deflated radii range over the entries of `A(i)`, i.e. over column
//! indices outside `{i, k}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::matrix::{ComplexMatrix, MatrixError};
use crate::poly::{sublevel_intervals, RealPoly};
use crate::section::RealSection;
use crate::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

/// `{z : |z - a||z - b| <= p}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CassiniOval {
    pub focus_a: Complex64,
    pub focus_b: Complex64,
    pub radius_product: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Region {
    Disk(Disk),
    Oval(CassiniOval),
    Points(Vec<Complex64>),
    Union(Vec<Region>),
    Intersection(Vec<Region>),
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Disk { center, radius }
    }

    pub fn slack(&self, z: Complex64) -> f64 {
        self.radius - (z - self.center).norm()
    }

    pub fn real_section(&self, tol: f64) -> RealSection {
        let r = self.radius + tol;
        let y = self.center.im.abs();
        if y > r {
            return RealSection::empty();
        }
        let h = libm::sqrt((r * r - y * y).max(0.0));
        RealSection::from_intervals(vec![(self.center.re - h, self.center.re + h)])
    }
}

impl CassiniOval {
    pub fn new(focus_a: Complex64, focus_b: Complex64, radius_product: f64) -> Self {
        debug_assert!(radius_product >= 0.0);
        CassiniOval {
            focus_a,
            focus_b,
            radius_product,
        }
    }

    pub fn slack(&self, z: Complex64) -> f64 {
        self.radius_product - (z - self.focus_a).norm() * (z - self.focus_b).norm()
    }

    /// `|x - a|^2 |x - b|^2 - p^2` as a real quartic in `x`.
    fn boundary_quartic(&self, p: f64) -> RealPoly {
        let quad = |f: Complex64| RealPoly::new(vec![f.norm_sqr(), -2.0 * f.re, 1.0]);
        let prod = quad(self.focus_a).mul(&quad(self.focus_b));
        let mut c = prod.coeffs().to_vec();
        c[0] -= p * p;
        RealPoly::new(c)
    }

    /// Real solutions of `|x - a||x - b| <= p + tol`.
    pub fn real_section(&self, tol: f64) -> RealSection {
        let p = self.radius_product + tol;
        let mut breaks = self.boundary_quartic(p).real_roots();
        for f in [self.focus_a, self.focus_b] {
            if f.im == 0.0 {
                breaks.push(f.re);
            }
        }
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        let (a, b) = (self.focus_a, self.focus_b);
        let slack = 1e-12 * p.max(f64::MIN_POSITIVE);
        let inside = |x: f64| {
            let z = Complex64::new(x, 0.0);
            (z - a).norm() * (z - b).norm() <= p + slack
        };
        RealSection::from_intervals(sublevel_intervals(&breaks, inside))
    }
}

impl Region {
    /// Signed depth of `z`: nonnegative exactly when `z` is in the region.
    /// Disks measure distance, ovals measure the product gap, points measure
    /// negative distance to the nearest point.
    pub fn slack(&self, z: Complex64) -> f64 {
        match self {
            Region::Disk(d) => d.slack(z),
            Region::Oval(o) => o.slack(z),
            Region::Points(ps) => ps
                .iter()
                .map(|&p| -(z - p).norm())
                .fold(f64::NEG_INFINITY, f64::max),
            Region::Union(children) => children
                .iter()
                .map(|c| c.slack(z))
                .fold(f64::NEG_INFINITY, f64::max),
            Region::Intersection(children) => children
                .iter()
                .map(|c| c.slack(z))
                .fold(f64::INFINITY, f64::min),
        }
    }

    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        self.slack(z) >= -tol
    }

    pub fn real_section(&self, tol: f64) -> RealSection {
        match self {
            Region::Disk(d) => d.real_section(tol),
            Region::Oval(o) => o.real_section(tol),
            Region::Points(ps) => RealSection::from_points(
                ps.iter().filter(|p| p.im.abs() <= tol).map(|p| p.re).collect(),
            ),
            Region::Union(children) => children
                .iter()
                .fold(RealSection::empty(), |acc, c| acc.union(&c.real_section(tol))),
            Region::Intersection(children) => {
                let mut it = children.iter();
                match it.next() {
                    None => RealSection::empty(),
                    Some(first) => it.fold(first.real_section(tol), |acc, c| {
                        acc.intersection(&c.real_section(tol), tol)
                    }),
                }
            }
        }
    }

    /// Nesting depth; a bare leaf has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Region::Union(c) | Region::Intersection(c) => {
                1 + c.iter().map(Region::depth).max().unwrap_or(0)
            }
            _ => 1,
        }
    }

    /// Every disk, oval and point-set leaf, depth first.
    pub fn leaves(&self) -> Vec<&Region> {
        let mut out = Vec::new();
        fn walk<'a>(r: &'a Region, out: &mut Vec<&'a Region>) {
            match r {
                Region::Union(c) | Region::Intersection(c) => c.iter().for_each(|x| walk(x, out)),
                leaf => out.push(leaf),
            }
        }
        walk(self, &mut out);
        out
    }
}

/// `r_i(A) = Σ_{j≠i} |a_ij|`.
pub fn deleted_row_sum(a: &ComplexMatrix, i: usize) -> f64 {
    a.row(i)
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, z)| z.norm())
        .sum()
}

pub fn gersgorin_disks(a: &ComplexMatrix) -> Vec<Disk> {
    (0..a.dim())
        .map(|i| Disk::new(a[(i, i)], deleted_row_sum(a, i)))
        .collect()
}

pub fn gersgorin_region(a: &ComplexMatrix) -> Region {
    Region::Union(gersgorin_disks(a).into_iter().map(Region::Disk).collect())
}

pub fn brauer_ovals(a: &ComplexMatrix) -> Result<Vec<CassiniOval>, MatrixError> {
    let n = a.dim();
    if n < 2 {
        return Err(MatrixError::TooSmall { n, min: 2 });
    }
    let radii: Vec<f64> = (0..n).map(|i| deleted_row_sum(a, i)).collect();
    let mut ovals = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            ovals.push(CassiniOval::new(a[(i, i)], a[(j, j)], radii[i] * radii[j]));
        }
    }
    Ok(ovals)
}

pub fn brauer_region(a: &ComplexMatrix) -> Result<Region, MatrixError> {
    Ok(Region::Union(
        brauer_ovals(a)?.into_iter().map(Region::Oval).collect(),
    ))
}

/// Center `a_kk - a_ik` and radius `Σ_{j∉{i,k}} |a_kj - a_ij|` of row `k` of
/// the deflation at `i` (0-based).
fn deflated_row(a: &ComplexMatrix, i: usize, k: usize) -> (Complex64, f64) {
    let radius = (0..a.dim())
        .filter(|&j| j != i && j != k)
        .map(|j| (a[(k, j)] - a[(i, j)]).norm())
        .sum();
    (a[(k, k)] - a[(i, k)], radius)
}

/// Geršgorin disks of the deflation `A(i)` (1-based `i`), read directly from
/// the entries of `A`, in row order `k = 1..n, k ≠ i`.
pub fn deflated_gersgorin_disks(a: &ComplexMatrix, i: usize) -> Result<Vec<Disk>, MatrixError> {
    let n = a.dim();
    if i == 0 || i > n {
        return Err(MatrixError::IndexOutOfRange { index: i, n });
    }
    Ok((0..n)
        .filter(|&k| k != i - 1)
        .map(|k| {
            let (c, r) = deflated_row(a, i - 1, k);
            Disk::new(c, r)
        })
        .collect())
}

/// Brauer ovals of the deflation `A(i)` (1-based `i`), over unordered pairs
/// `{j, k}` not containing `i`.
pub fn deflated_brauer_ovals(
    a: &ComplexMatrix,
    i: usize,
) -> Result<Vec<CassiniOval>, MatrixError> {
    let n = a.dim();
    if i == 0 || i > n {
        return Err(MatrixError::IndexOutOfRange { index: i, n });
    }
    let rows: Vec<(Complex64, f64)> = (0..n)
        .filter(|&k| k != i - 1)
        .map(|k| deflated_row(a, i - 1, k))
        .collect();
    let mut ovals = Vec::new();
    for (x, &(cj, rj)) in rows.iter().enumerate() {
        for &(ck, rk) in &rows[x + 1..] {
            ovals.push(CassiniOval::new(cj, ck, rj * rk));
        }
    }
    Ok(ovals)
}

pub fn rowsum_gersgorin_region(a: &ComplexMatrix) -> Result<Region, MatrixError> {
    let n = a.dim();
    if n < 2 {
        return Err(MatrixError::TooSmall { n, min: 2 });
    }
    let gamma = a.require_constant_row_sum()?;
    let parts = (1..=n)
        .map(|i| {
            let mut leaves: Vec<Region> = deflated_gersgorin_disks(a, i)?
                .into_iter()
                .map(Region::Disk)
                .collect();
            leaves.push(Region::Points(vec![gamma]));
            Ok(Region::Union(leaves))
        })
        .collect::<Result<Vec<_>, MatrixError>>()?;
    Ok(Region::Intersection(parts))
}

pub fn rowsum_brauer_region(a: &ComplexMatrix) -> Result<Region, MatrixError> {
    let n = a.dim();
    if n < 3 {
        return Err(MatrixError::TooSmall { n, min: 3 });
    }
    let gamma = a.require_constant_row_sum()?;
    let parts = (1..=n)
        .map(|i| {
            let mut leaves: Vec<Region> = deflated_brauer_ovals(a, i)?
                .into_iter()
                .map(Region::Oval)
                .collect();
            leaves.push(Region::Points(vec![gamma]));
            Ok(Region::Union(leaves))
        })
        .collect::<Result<Vec<_>, MatrixError>>()?;
    Ok(Region::Intersection(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_matrix, generate, Family, GraphMatrixKind};
    use crate::matrix::fixtures::{c, worked_example};

    const S2: f64 = core::f64::consts::SQRT_2;

    fn approx(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn worked_example_gersgorin_disks() {
        let disks = gersgorin_disks(&worked_example());
        let want = [(c(1.0, 0.0), 1.0 + S2), (c(2.0, 1.0), 1.0), (c(0.0, 1.0), 3.0)];
        for (d, (center, r)) in disks.iter().zip(want) {
            assert_eq!(d.center, center);
            assert!(approx(d.radius, r));
        }
    }

    #[test]
    fn diagonal_matrices_collapse_to_points() {
        let a = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 1.0)]);
        assert!(gersgorin_disks(&a).iter().all(|d| d.radius == 0.0));
        for o in brauer_ovals(&a).unwrap() {
            assert_eq!(o.radius_product, 0.0);
        }
        let b = brauer_region(&a).unwrap();
        assert!(b.contains(c(3.0, 1.0), 0.0));
        assert!(!b.contains(c(1.5, 0.0), 1e-9));
    }

    #[test]
    fn complete_graph_disk() {
        let a = build_matrix(&generate(&Family::Complete(5)).unwrap(), GraphMatrixKind::Adjacency)
            .unwrap();
        for d in gersgorin_disks(&a) {
            assert_eq!(d.center, c(0.0, 0.0));
            assert_eq!(d.radius, 4.0);
        }
    }

    #[test]
    fn brauer_small_cases() {
        let swap = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let ovals = brauer_ovals(&swap).unwrap();
        assert_eq!(ovals, vec![CassiniOval::new(c(0.0, 0.0), c(0.0, 0.0), 1.0)]);
        assert!(brauer_ovals(&ComplexMatrix::identity(1)).is_err());

        let ovals = brauer_ovals(&worked_example()).unwrap();
        let want = [
            (c(1.0, 0.0), c(2.0, 1.0), 1.0 + S2),
            (c(1.0, 0.0), c(0.0, 1.0), 3.0 * (1.0 + S2)),
            (c(2.0, 1.0), c(0.0, 1.0), 3.0),
        ];
        for (o, (a, b, p)) in ovals.iter().zip(want) {
            assert_eq!((o.focus_a, o.focus_b), (a, b));
            assert!(approx(o.radius_product, p));
        }
    }

    #[test]
    fn worked_example_first_deflated_component() {
        let disks = deflated_gersgorin_disks(&worked_example(), 1).unwrap();
        assert_eq!(
            disks,
            vec![Disk::new(c(1.0, 0.0), 1.0), Disk::new(c(0.0, 0.0), 1.0)]
        );
        let ovals = deflated_brauer_ovals(&worked_example(), 1).unwrap();
        assert_eq!(
            ovals,
            vec![CassiniOval::new(c(1.0, 0.0), c(0.0, 0.0), 1.0)]
        );
    }

    #[test]
    fn deflated_disks_match_disks_of_deflation() {
        let a = worked_example();
        for i in 1..=3 {
            assert_eq!(
                deflated_gersgorin_disks(&a, i).unwrap(),
                gersgorin_disks(&a.deflate(i).unwrap())
            );
        }
    }

    #[test]
    fn complete_graph_rowsum_regions_are_the_spectrum() {
        for n in 3..7 {
            let a = build_matrix(&generate(&Family::Complete(n)).unwrap(), GraphMatrixKind::Adjacency)
                .unwrap();
            let want = RealSection {
                intervals: vec![(-1.0, -1.0)],
                isolated_points: vec![(n - 1) as f64],
            };
            let g = rowsum_gersgorin_region(&a).unwrap();
            assert_eq!(g.real_section(0.0), want);
            assert!(g.depth() <= 3);
            let b = rowsum_brauer_region(&a).unwrap();
            assert_eq!(b.real_section(0.0), want);
            assert!(!g.contains(c(0.0, 0.0), 1e-9));
            assert!(!g.contains(c(-1.0, 0.1), 1e-9));
        }
    }

    #[test]
    fn all_ones_rowsum_region() {
        let ones = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let r = rowsum_gersgorin_region(&ones).unwrap();
        let s = r.real_section(0.0);
        assert!(s.contains(0.0, 0.0) && s.contains(2.0, 0.0));
        assert!(!s.contains(1.0, 1e-9));
    }

    #[test]
    fn scalar_matrix_rowsum_brauer_is_a_point() {
        let a = ComplexMatrix::from_diagonal(&[c(2.0, 1.0); 4]);
        let r = rowsum_brauer_region(&a).unwrap();
        assert!(r.contains(c(2.0, 1.0), 0.0));
        assert!(!r.contains(c(2.0, 1.01), 1e-9));
        assert!(!r.contains(c(0.0, 0.0), 1e-9));
    }

    #[test]
    fn rowsum_region_errors() {
        let uneven = ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        assert!(matches!(
            rowsum_gersgorin_region(&uneven),
            Err(MatrixError::NonConstantRowSum { .. })
        ));
        let ones = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(
            rowsum_brauer_region(&ones),
            Err(MatrixError::TooSmall { n: 2, min: 3 })
        );
    }

    #[test]
    fn gamma_always_inside_rowsum_regions() {
        let a = worked_example();
        let gamma = c(2.0, 2.0);
        assert!(rowsum_gersgorin_region(&a).unwrap().contains(gamma, 0.0));
        assert!(rowsum_brauer_region(&a).unwrap().contains(gamma, 0.0));
    }

    #[test]
    fn membership_boundaries() {
        let d = Region::Disk(Disk::new(c(0.0, 0.0), 1.0));
        assert!(d.contains(c(1.0, 0.0), 0.0));
        assert!(!d.contains(c(1.0, 0.1), 1e-9));
    }

    #[test]
    fn sections_of_leaves() {
        let tangent = Disk::new(c(2.0, 1.0), 1.0).real_section(0.0);
        assert_eq!(tangent.intervals, vec![(2.0, 2.0)]);

        let o = CassiniOval::new(c(0.0, 0.0), c(0.0, 0.0), 1.0).real_section(0.0);
        assert_eq!(o.intervals.len(), 1);
        assert!(approx(o.intervals[0].0, -1.0) && approx(o.intervals[0].1, 1.0));

        let o = CassiniOval::new(c(-1.0, 0.0), c(1.0, 0.0), 1.0).real_section(0.0);
        assert_eq!(o.intervals.len(), 1);
        assert!(approx(o.intervals[0].0, -S2) && approx(o.intervals[0].1, S2));

        // Two loops: x^2 in [1 - p, 1 + p].
        let o = CassiniOval::new(c(-1.0, 0.0), c(1.0, 0.0), 0.5).real_section(0.0);
        let (lo, hi) = (libm::sqrt(0.5), libm::sqrt(1.5));
        assert_eq!(o.intervals.len(), 2);
        assert!(approx(o.intervals[0].0, -hi) && approx(o.intervals[0].1, -lo));
        assert!(approx(o.intervals[1].0, lo) && approx(o.intervals[1].1, hi));

        // Touches the axis at a single point.
        let o = CassiniOval::new(c(0.0, 1.0), c(0.0, 1.0), 1.0).real_section(0.0);
        assert_eq!(o.intervals.len(), 1);
        assert!(o.intervals[0].0.abs() < 1e-7 && o.intervals[0].1.abs() < 1e-7);

        let far = CassiniOval::new(c(0.0, 3.0), c(1.0, 3.0), 1.0).real_section(0.0);
        assert!(far.is_empty());
    }
}
