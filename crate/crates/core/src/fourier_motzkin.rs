//! Exact feasibility of strict homogeneous linear systems `<a_k, x> > 0`
//! by Fourier–Motzkin elimination, with a witness from back-substitution.

use num_traits::{Signed, Zero};

use crate::rational::{int, Rat};
use crate::vector::Vector;

/// A rational point satisfying every `<a, x> > 0`, or `None` if the open
/// cone they describe is empty.
pub fn strict_witness(constraints: &[Vector]) -> Option<Vector> {
    let dim = constraints.first()?.dim();
    let mut stages: Vec<Vec<Vector>> = vec![normalize(constraints.to_vec())];
    for var in 0..dim {
        let current = stages.last()?;
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for a in current {
            if a[var].is_positive() {
                pos.push(a);
            } else if a[var].is_negative() {
                neg.push(a);
            } else {
                next.push(a.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                // positive combination cancelling `var`; strictness is preserved
                next.push(&n.scale(&p[var]) - &p.scale(&n[var]));
            }
        }
        let next = normalize(next);
        if next.iter().any(Vector::is_zero) {
            return None;
        }
        stages.push(next);
    }
    // back-substitute from the last variable
    let mut x = Vector::zero(dim).into_coords();
    for var in (0..dim).rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for a in &stages[var] {
            let coef = &a[var];
            if coef.is_zero() {
                continue;
            }
            let rest = (var + 1..dim).fold(Rat::zero(), |acc, j| acc + &a[j] * &x[j]);
            let bound = -rest / coef;
            if coef.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        x[var] = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / int(2),
            (Some(l), None) => l.floor() + int(1),
            (None, Some(u)) => u.ceil() - int(1),
            (None, None) => Rat::zero(),
        };
    }
    let x = Vector::new(x).primitive();
    constraints.iter().all(|a| a.dot(&x).is_positive()).then_some(x)
}

/// Scales to primitive integer form and removes duplicates.
fn normalize(mut rows: Vec<Vector>) -> Vec<Vector> {
    for r in rows.iter_mut() {
        *r = r.primitive();
    }
    rows.sort();
    rows.dedup();
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector;

    #[test]
    fn octant_is_feasible() {
        let cons = [vector![1, 0, 0], vector![0, 1, 0], vector![0, 0, 1]];
        let w = strict_witness(&cons).unwrap();
        assert!(cons.iter().all(|a| a.dot(&w).is_positive()));
    }

    #[test]
    fn opposite_halfspaces_are_infeasible() {
        assert!(strict_witness(&[vector![1, 1, 0], vector![-1, -1, 0]]).is_none());
        assert!(strict_witness(&[vector![1, 0], vector![0, 1], vector![-1, -1]]).is_none());
    }

    #[test]
    fn thin_cone() {
        // 100 y > x > 99 y, y > 0
        let cons = [vector![1, -99], vector![-1, 100], vector![0, 1]];
        let w = strict_witness(&cons).unwrap();
        assert!(cons.iter().all(|a| a.dot(&w).is_positive()));
    }
}
