//! Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rat;
use crate::vector::Vector;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rat>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::from_integer(1.into()) / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows: Vec<Vec<Rat>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    rref(&mut rows).len()
}

/// Basis of the right null space of the matrix whose rows are `rows`.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|v| v.coords().to_vec()).collect();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); ncols];
            x[f] = Rat::from_integer(1.into());
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -m[row][f].clone();
            }
            Vector::new(x)
        })
        .collect()
}

/// Affine hyperplane `{y : <normal, y> = offset}` through `points`, if the
/// points are affinely independent and there are exactly `dim` of them.
pub fn hyperplane_through(points: &[Vector]) -> Option<(Vector, Rat)> {
    let dim = points.first()?.dim();
    if points.len() != dim {
        return None;
    }
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p - &points[0]).collect();
    let null = nullspace(&diffs, dim);
    if null.len() != 1 {
        return None;
    }
    let normal = null.into_iter().next()?.primitive();
    let offset = normal.dot(&points[0]);
    Some((normal, offset))
}

/// Solves `A c = b` for a possibly overdetermined consistent system.
/// Returns `None` if the system is inconsistent or underdetermined.
pub fn solve_exact(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.first()?.len();
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&n) || pivots.len() != n {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::vector;

    #[test]
    fn line_through_two_points() {
        // reflected triangle vertices (0,-1) and (1,1): y = 2x - 1
        let (n, c) = hyperplane_through(&[vector![0, -1], vector![1, 1]]).unwrap();
        let y = vector![3, 5];
        assert_eq!(n.dot(&y), c);
        assert!(hyperplane_through(&[vector![1, 1], vector![1, 1]]).is_none());
    }

    #[test]
    fn plane_through_three_points() {
        let (n, c) = hyperplane_through(&[vector![1, 0, 0], vector![0, 1, 0], vector![0, 0, 1]]).unwrap();
        assert_eq!(n, vector![1, 1, 1]);
        assert_eq!(c, int(1));
        assert!(hyperplane_through(&[vector![0, 0, 0], vector![1, 1, 1], vector![2, 2, 2]]).is_none());
    }

    #[test]
    fn overdetermined_solve() {
        // c0 + c1 x fitted to 3 collinear samples of 1/2 + 2x
        let a = vec![vec![int(1), int(0)], vec![int(1), int(1)], vec![int(1), int(3)]];
        let b = vec![rat(1, 2), rat(5, 2), rat(13, 2)];
        assert_eq!(solve_exact(&a, &b).unwrap(), vec![rat(1, 2), int(2)]);
        let bad = vec![rat(1, 2), rat(5, 2), int(7)];
        assert!(solve_exact(&a, &bad).is_none());
    }

    #[test]
    fn rank_detects_dependence() {
        assert_eq!(rank(&[vector![1, 2, 3], vector![2, 4, 6]]), 1);
        assert_eq!(rank(&[vector![1, 0, 0], vector![0, 1, 0], vector![1, 1, 0]]), 2);
    }
}
