//! Finite unions of closed real intervals plus isolated points.

use alloc::vec::Vec;

/// Intersection of a planar region with the real axis.
///
/// `intervals` are closed, sorted and pairwise disjoint (degenerate
/// `[a, a]` intervals are allowed). `isolated_points` are sorted and never
/// lie inside an interval.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RealSection {
    pub intervals: Vec<(f64, f64)>,
    pub isolated_points: Vec<f64>,
}

impl RealSection {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(intervals: Vec<(f64, f64)>) -> Self {
        RealSection {
            intervals,
            isolated_points: Vec::new(),
        }
        .normalized(0.0)
    }

    pub fn from_points(points: Vec<f64>) -> Self {
        RealSection {
            intervals: Vec::new(),
            isolated_points: points,
        }
        .normalized(0.0)
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.isolated_points.is_empty()
    }

    fn in_intervals(&self, x: f64, tol: f64) -> bool {
        self.intervals
            .iter()
            .any(|&(lo, hi)| x >= lo - tol && x <= hi + tol)
    }

    fn at_point(&self, x: f64, tol: f64) -> bool {
        self.isolated_points.iter().any(|&p| (x - p).abs() <= tol)
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.in_intervals(x, tol) || self.at_point(x, tol)
    }

    /// Smallest and largest covered value over intervals only.
    pub fn interval_hull(&self) -> Option<(f64, f64)> {
        Some((self.intervals.first()?.0, self.intervals.last()?.1))
    }

    /// Smallest and largest covered value, points included.
    pub fn hull(&self) -> Option<(f64, f64)> {
        let lo = self
            .intervals
            .first()
            .map(|i| i.0)
            .into_iter()
            .chain(self.isolated_points.first().copied())
            .reduce(f64::min)?;
        let hi = self
            .intervals
            .last()
            .map(|i| i.1)
            .into_iter()
            .chain(self.isolated_points.last().copied())
            .reduce(f64::max)?;
        Some((lo, hi))
    }

    /// Sorts, merges overlapping or touching intervals, drops points that an
    /// interval covers, and merges points closer than `tol`.
    pub fn normalized(mut self, tol: f64) -> Self {
        self.intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(self.intervals.len());
        for (lo, hi) in self.intervals {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        self.intervals = merged;
        let mut points = core::mem::take(&mut self.isolated_points);
        points.sort_by(f64::total_cmp);
        points.dedup_by(|a, b| (*a - *b).abs() <= tol);
        points.retain(|&p| !self.in_intervals(p, 0.0));
        self.isolated_points = points;
        self
    }

    pub fn union(&self, other: &RealSection) -> RealSection {
        let mut intervals = self.intervals.clone();
        intervals.extend_from_slice(&other.intervals);
        let mut points = self.isolated_points.clone();
        points.extend_from_slice(&other.isolated_points);
        RealSection {
            intervals,
            isolated_points: points,
        }
        .normalized(0.0)
    }

    /// Set intersection; points match each other within `tol`.
    pub fn intersection(&self, other: &RealSection, tol: f64) -> RealSection {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut intervals = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = a[i].0.max(b[j].0);
            let hi = a[i].1.min(b[j].1);
            if lo <= hi {
                intervals.push((lo, hi));
            }
            if a[i].1 < b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        let mut points: Vec<f64> = self
            .isolated_points
            .iter()
            .copied()
            .filter(|&p| other.contains(p, tol))
            .collect();
        points.extend(
            other
                .isolated_points
                .iter()
                .copied()
                .filter(|&p| self.in_intervals(p, tol)),
        );
        RealSection {
            intervals,
            isolated_points: points,
        }
        .normalized(tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn union_merges_and_absorbs_points() {
        let a = RealSection::from_intervals(vec![(0.0, 1.0), (2.0, 3.0)]);
        let b = RealSection {
            intervals: vec![(1.0, 2.0)],
            isolated_points: vec![2.5, 7.0],
        };
        let u = a.union(&b);
        assert_eq!(u.intervals, vec![(0.0, 3.0)]);
        assert_eq!(u.isolated_points, vec![7.0]);
    }

    #[test]
    fn intersection_keeps_shared_points() {
        let a = RealSection {
            intervals: vec![(-1.0, 0.5)],
            isolated_points: vec![3.0],
        };
        let b = RealSection {
            intervals: vec![(0.0, 1.0)],
            isolated_points: vec![3.0, -0.5],
        };
        let x = a.intersection(&b, 0.0);
        assert_eq!(x.intervals, vec![(0.0, 0.5)]);
        assert_eq!(x.isolated_points, vec![-0.5, 3.0]);
    }

    #[test]
    fn degenerate_intervals_survive() {
        let a = RealSection::from_intervals(vec![(2.0, 2.0)]);
        assert!(a.contains(2.0, 0.0));
        assert!(!a.contains(2.1, 0.0));
        let b = RealSection::from_intervals(vec![(0.0, 2.0)]);
        assert_eq!(a.intersection(&b, 0.0).intervals, vec![(2.0, 2.0)]);
        assert!(a.intersection(&RealSection::from_intervals(vec![(3.0, 4.0)]), 0.0).is_empty());
    }
}
