//! Exact convex hulls in the plane and in space.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::linalg::{hyperplane_through, rank};
use crate::vector::{det2, Vector};

/// Convex hull of planar points, counterclockwise, without collinear
/// boundary points. Returns fewer than three points for degenerate input.
pub fn planar_hull(points: &[Vector]) -> Vec<Vector> {
    let mut pts: Vec<Vector> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &Vector, a: &Vector, b: &Vector| det2(&(a - o), &(b - o));
    // Andrew's monotone chain; pop on non-left turns to drop collinear points
    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Rotates a counterclockwise cycle so that it starts at the topmost vertex,
/// leftmost among ties.
pub fn canonical_start(cycle: &mut [Vector]) {
    if cycle.is_empty() {
        return;
    }
    let start = (0..cycle.len())
        .max_by(|&i, &j| {
            cycle[i][1]
                .cmp(&cycle[j][1])
                .then_with(|| cycle[j][0].cmp(&cycle[i][0]))
        })
        .unwrap_or(0);
    cycle.rotate_left(start);
}

/// Facets of the convex hull of spatial points, as sets of indices into
/// `points`, found by testing every affinely independent triple for
/// being a supporting plane. Points must be pairwise distinct.
pub fn spatial_hull_facets(points: &[Vector]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let Some((normal, offset)) =
                    hyperplane_through(&[points[i].clone(), points[j].clone(), points[k].clone()])
                else {
                    continue;
                };
                let mut above = false;
                let mut below = false;
                let mut on = Vec::new();
                for (m, p) in points.iter().enumerate() {
                    match (normal.dot(p) - &offset).cmp(&Zero::zero()) {
                        Ordering::Greater => above = true,
                        Ordering::Less => below = true,
                        Ordering::Equal => on.push(m),
                    }
                }
                if above && below {
                    continue;
                }
                if !facets.contains(&on) {
                    facets.push(on);
                }
            }
        }
    }
    facets.sort();
    facets
}

/// Whether the points span an affine subspace of full dimension.
pub fn is_full_dimensional(points: &[Vector]) -> bool {
    let Some(first) = points.first() else {
        return false;
    };
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p - first).collect();
    rank(&diffs) == first.dim()
}
