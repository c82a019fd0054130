//! Finite-set metric geometry: point sets, balls, greedy covering nets,
//! Hausdorff distance, and the geometric scale grids used by the dimension
//! estimators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for distance comparisons at ball boundaries.
/// Closed balls throughout; membership ties resolve inward.
pub const DIST_TOL: f64 = 1e-12;

/// A finite set of points in m-dimensional Euclidean space, the computable
/// stand-in for a compact set.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("point set must be nonempty".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "point has {} coordinates, expected {}",
                    p.len(),
                    dim
                )));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::InvalidInput("coordinates must be finite".into()));
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_1d(xs: &[f64]) -> Result<Self> {
        PointSet::new(1, xs.iter().map(|&x| vec![x]).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // nonempty by construction
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    /// Largest pairwise distance; 0 for a singleton.
    pub fn diameter(&self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                d = d.max(euclidean(&self.points[i], &self.points[j]));
            }
        }
        d
    }

    /// Index of the lexicographically smallest point.
    pub fn lex_min_index(&self) -> usize {
        let mut best = 0;
        for i in 1..self.points.len() {
            if lex_less(&self.points[i], &self.points[best]) {
                best = i;
            }
        }
        best
    }
}

pub(crate) fn lex_less(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

pub fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn check_same_dim(a: &PointSet, b: &PointSet) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::InvalidInput(format!(
            "ambient dimension mismatch: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// Hausdorff distance between finite point sets; exact for finite sets.
pub fn hausdorff_distance(a: &PointSet, b: &PointSet) -> Result<f64> {
    check_same_dim(a, b)?;
    Ok(directed_hausdorff(a, b).max(directed_hausdorff(b, a)))
}

fn directed_hausdorff(a: &PointSet, b: &PointSet) -> f64 {
    let mut worst = 0.0f64;
    for p in a.points() {
        let mut nearest = f64::INFINITY;
        for q in b.points() {
            let d = euclidean(p, q);
            if d < nearest {
                nearest = d;
            }
        }
        worst = worst.max(nearest);
    }
    worst
}

/// Points of `e` within the closed ball of radius `radius` about `x`.
/// Returns `None` when the ball captures nothing.
pub fn ball_restrict(e: &PointSet, x: &[f64], radius: f64) -> Result<Option<PointSet>> {
    if x.len() != e.dim() {
        return Err(Error::InvalidInput(format!(
            "ball center has {} coordinates, expected {}",
            x.len(),
            e.dim()
        )));
    }
    if !(radius > 0.0) {
        return Err(Error::InvalidInput("ball radius must be positive".into()));
    }
    let inside: Vec<Vec<f64>> = e
        .points()
        .iter()
        .filter(|p| euclidean(p, x) <= radius + DIST_TOL)
        .cloned()
        .collect();
    if inside.is_empty() {
        Ok(None)
    } else {
        Ok(Some(PointSet::new(e.dim(), inside)?))
    }
}

/// Greedy farthest-point r-net of `e`: starts at the lexicographically
/// smallest point and repeatedly adds the point farthest from the current
/// net until every point sits within `r` of a net point. The traversal
/// order does not depend on `r`, so net sizes are non-increasing in `r`.
pub fn greedy_net(e: &PointSet, r: f64) -> PointSet {
    let indices = greedy_net_indices(e.points(), r);
    let points = indices.iter().map(|&i| e.point(i).to_vec()).collect();
    PointSet::new(e.dim(), points).expect("net of a valid point set is valid")
}

/// Size of the greedy farthest-point r-net.
pub fn covering_number(e: &PointSet, r: f64) -> usize {
    greedy_net_indices(e.points(), r).len()
}

pub(crate) fn greedy_net_indices(points: &[Vec<f64>], r: f64) -> Vec<usize> {
    let mut first = 0;
    for i in 1..points.len() {
        if lex_less(&points[i], &points[first]) {
            first = i;
        }
    }
    let mut net = vec![first];
    let mut dist: Vec<f64> = points.iter().map(|p| euclidean(p, &points[first])).collect();
    loop {
        let mut far = 0;
        for i in 1..points.len() {
            if dist[i] > dist[far]
                || (dist[i] == dist[far] && lex_less(&points[i], &points[far]))
            {
                far = i;
            }
        }
        if dist[far] <= r + DIST_TOL {
            return net;
        }
        net.push(far);
        for i in 0..points.len() {
            let d = euclidean(&points[i], &points[far]);
            if d < dist[i] {
                dist[i] = d;
            }
        }
    }
}

/// Geometric progression of scales with an admissibility floor on the
/// ratio R/r of any scale pair handed to the estimators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleGrid {
    pub r_min: f64,
    pub r_max: f64,
    pub levels: usize,
    pub ratio_floor: f64,
}

/// Default minimum R/r for an admissible scale pair.
pub const DEFAULT_RATIO_FLOOR: f64 = 8.0;

impl ScaleGrid {
    pub fn new(r_min: f64, r_max: f64, levels: usize, ratio_floor: f64) -> Result<Self> {
        if !(r_min > 0.0 && r_max.is_finite() && r_min < r_max) {
            return Err(Error::InvalidInput(
                "scale grid requires 0 < r_min < r_max".into(),
            ));
        }
        if levels < 2 {
            return Err(Error::InvalidInput("scale grid requires at least 2 levels".into()));
        }
        if !(ratio_floor > 1.0) {
            return Err(Error::InvalidInput("ratio floor must exceed 1".into()));
        }
        Ok(ScaleGrid { r_min, r_max, levels, ratio_floor })
    }

    pub fn with_default_floor(r_min: f64, r_max: f64, levels: usize) -> Result<Self> {
        ScaleGrid::new(r_min, r_max, levels, DEFAULT_RATIO_FLOOR)
    }

    /// The scales, ascending from r_min to r_max.
    pub fn scales(&self) -> Vec<f64> {
        let step = (self.r_max / self.r_min).powf(1.0 / (self.levels - 1) as f64);
        (0..self.levels)
            .map(|i| {
                if i + 1 == self.levels {
                    self.r_max
                } else {
                    self.r_min * step.powi(i as i32)
                }
            })
            .collect()
    }

    /// All (r, R) pairs off the grid with R/r at or above the floor.
    pub fn admissible_pairs(&self) -> Vec<(f64, f64)> {
        let scales = self.scales();
        let mut pairs = Vec::new();
        for i in 0..scales.len() {
            for j in (i + 1)..scales.len() {
                if scales[j] / scales[i] >= self.ratio_floor {
                    pairs.push((scales[i], scales[j]));
                }
            }
        }
        pairs
    }

    /// The grid with every scale multiplied by `factor` (floor unchanged).
    pub fn scaled(&self, factor: f64) -> Result<ScaleGrid> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::InvalidInput("grid scale factor must be positive".into()));
        }
        ScaleGrid::new(
            self.r_min * factor,
            self.r_max * factor,
            self.levels,
            self.ratio_floor,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(xs: &[f64]) -> PointSet {
        PointSet::from_1d(xs).unwrap()
    }

    #[test]
    fn pointset_rejects_bad_input() {
        assert!(PointSet::new(1, vec![]).is_err());
        assert!(PointSet::new(2, vec![vec![0.0]]).is_err());
        assert!(PointSet::new(1, vec![vec![f64::NAN]]).is_err());
        assert!(PointSet::new(1, vec![vec![f64::INFINITY]]).is_err());
    }

    #[test]
    fn hausdorff_identity() {
        let a = ps(&[0.0, 0.7, 2.0]);
        assert_eq!(hausdorff_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn hausdorff_singletons() {
        let a = ps(&[0.0]);
        let b = ps(&[3.0]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 3.0);
    }

    #[test]
    fn hausdorff_three_vs_two() {
        // brute force over the four point-to-set distances:
        // d(0,B)=0, d(1,B)=1, d(2,B)=0; d(0,A)=0, d(2,A)=0 -> max = 1
        let a = ps(&[0.0, 1.0, 2.0]);
        let b = ps(&[0.0, 2.0]);
        assert_eq!(hausdorff_distance(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn hausdorff_dimension_mismatch() {
        let a = ps(&[0.0]);
        let b = PointSet::new(2, vec![vec![0.0, 0.0]]).unwrap();
        assert!(hausdorff_distance(&a, &b).is_err());
    }

    #[test]
    fn ball_restrict_filters() {
        let e = ps(&[0.0, 0.5, 1.0]);
        let got = ball_restrict(&e, &[0.0], 0.6).unwrap().unwrap();
        assert_eq!(got.points(), &[vec![0.0], vec![0.5]]);
    }

    #[test]
    fn ball_restrict_whole_set() {
        let e = ps(&[0.0, 0.5, 1.0]);
        let got = ball_restrict(&e, &[0.25], 10.0).unwrap().unwrap();
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn ball_restrict_empty_marker() {
        let e = ps(&[0.0, 1.0]);
        assert!(ball_restrict(&e, &[0.5], 0.4).unwrap().is_none());
    }

    #[test]
    fn covering_single_point() {
        let e = ps(&[0.3]);
        assert_eq!(covering_number(&e, 1e-6), 1);
        assert_eq!(covering_number(&e, 10.0), 1);
    }

    #[test]
    fn covering_gap_vs_radius() {
        let e = ps(&[0.0, 1.0]);
        assert_eq!(covering_number(&e, 0.4), 2);
        assert_eq!(covering_number(&e, 1.5), 1);
    }

    #[test]
    fn scale_grid_progression() {
        let g = ScaleGrid::with_default_floor(0.001, 1.0, 4).unwrap();
        let s = g.scales();
        assert_eq!(s.len(), 4);
        assert!((s[0] - 0.001).abs() < 1e-15);
        assert_eq!(s[3], 1.0);
        let q0 = s[1] / s[0];
        let q1 = s[2] / s[1];
        assert!((q0 - q1).abs() < 1e-9);
    }

    #[test]
    fn scale_grid_pairs_respect_floor() {
        let g = ScaleGrid::new(0.01, 1.0, 5, 8.0).unwrap();
        for (r, big) in g.admissible_pairs() {
            assert!(big / r >= 8.0);
        }
    }

    #[test]
    fn scale_grid_rejects_bad() {
        assert!(ScaleGrid::new(0.0, 1.0, 4, 8.0).is_err());
        assert!(ScaleGrid::new(2.0, 1.0, 4, 8.0).is_err());
        assert!(ScaleGrid::new(0.1, 1.0, 1, 8.0).is_err());
        assert!(ScaleGrid::new(0.1, 1.0, 4, 1.0).is_err());
    }
}
