//! Named test polytopes and random generators.

use rand::Rng;

use crate::error::Result;
use crate::polytope::{build_polygon, build_polytope, Polytope};
use crate::rational::{int, rat, Rat};
use crate::vector::Vector;
use crate::vector;

/// The triangle with vertices `(0,1), (-1,-1), (1,-1)`.
pub fn triangle() -> Polytope {
    build_polygon(&[vector![0, 1], vector![-1, -1], vector![1, -1]]).expect("valid triangle")
}

/// `[lo, hi]^d`.
pub fn cube(d: usize, lo: i64, hi: i64) -> Polytope {
    Polytope::axis_box(&vec![(int(lo), int(hi)); d]).expect("valid cube")
}

/// `[-1, 1]^2`.
pub fn square() -> Polytope {
    cube(2, -1, 1)
}

pub fn rectangle(w: Rat, h: Rat) -> Polytope {
    Polytope::axis_box(&[(-w.clone(), w), (-h.clone(), h)]).expect("valid rectangle")
}

/// Affine image of the regular hexagon, centred at the origin.
pub fn hexagon() -> Polytope {
    build_polygon(&[
        vector![2, 0],
        vector![1, 2],
        vector![-1, 2],
        vector![-2, 0],
        vector![-1, -2],
        vector![1, -2],
    ])
    .expect("valid hexagon")
}

/// A centrally symmetric hexagon that is not affinely regular.
pub fn skew_hexagon() -> Polytope {
    let pts = [(-4, -5), (-5, 2), (-3, 5), (4, 5), (5, -2), (3, -5)];
    build_polygon(&pts.map(|(x, y)| Vector::new(vec![rat(x, 5), rat(y, 5)]))).expect("valid hexagon")
}

pub fn parallelogram() -> Polytope {
    build_polygon(&[vector![-2, -1], vector![1, -1], vector![2, 1], vector![-1, 1]]).expect("valid parallelogram")
}

pub fn acute_triangle() -> Polytope {
    build_polygon(&[vector![-2, 0], vector![2, 0], vector![1, 3]]).expect("valid triangle")
}

/// Triangle with an angle of more than `pi / 2` at `(0, 0)`.
pub fn obtuse_triangle() -> Polytope {
    build_polygon(&[vector![0, 0], vector![4, 0], vector![-1, 1]]).expect("valid triangle")
}

/// Icosahedron `(0, ±1, ±phi)` and cyclic shifts, with the rational
/// golden-ratio approximation `phi = 13/8`. The vertex set is centrally
/// symmetric and has the icosahedral combinatorics.
pub fn icosahedron() -> Polytope {
    build_polytope(&icosahedron_vertices(), None).expect("valid icosahedron")
}

pub fn icosahedron_vertices() -> Vec<Vector> {
    let phi = rat(13, 8);
    let mut out = Vec::with_capacity(12);
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            let a = int(s1);
            let b = &phi * int(s2);
            out.push(Vector::new(vec![int(0), a.clone(), b.clone()]));
            out.push(Vector::new(vec![a.clone(), b.clone(), int(0)]));
            out.push(Vector::new(vec![b, int(0), a]));
        }
    }
    out
}

/// Simplex `conv(0, e1, e2, e3)` shifted so the origin is interior.
pub fn simplex3() -> Polytope {
    let shift = Vector::new(vec![rat(-1, 5), rat(-1, 4), rat(-1, 6)]);
    let pts = [vector![0, 0, 0], vector![1, 0, 0], vector![0, 1, 0], vector![0, 0, 1]];
    build_polytope(&pts.map(|p| &p + &shift), None).expect("valid simplex")
}

fn random_point<R: Rng>(rng: &mut R, d: usize, radius: i64) -> Vector {
    Vector::from_ints(&(0..d).map(|_| rng.gen_range(-radius..=radius)).collect::<Vec<_>>())
}

/// Hull of `n` random integer points in `[-radius, radius]^2`, retried until
/// it is two-dimensional.
pub fn random_polygon<R: Rng>(rng: &mut R, n: usize, radius: i64) -> Polytope {
    loop {
        let pts: Vec<Vector> = (0..n.max(3)).map(|_| random_point(rng, 2, radius)).collect();
        if let Ok(p) = build_polygon(&pts) {
            return p;
        }
    }
}

/// Hull of `n` random points and their negatives; symmetric about the origin.
pub fn random_symmetric_polygon<R: Rng>(rng: &mut R, n: usize, radius: i64) -> Polytope {
    loop {
        let mut pts: Vec<Vector> = (0..n.max(2)).map(|_| random_point(rng, 2, radius)).collect();
        pts.extend(pts.clone().iter().map(|p| -p));
        if let Ok(p) = build_polygon(&pts) {
            return p;
        }
    }
}

/// Symmetric polygon with exactly `2k` vertices.
pub fn random_symmetric_polygon_exact<R: Rng>(rng: &mut R, k: usize, radius: i64) -> Polytope {
    loop {
        let p = random_symmetric_polygon(rng, k, radius);
        if p.vertices().len() == 2 * k {
            return p;
        }
    }
}

/// Random box with integer bounds in `[-radius, radius]`; symmetric when asked.
pub fn random_box<R: Rng>(rng: &mut R, d: usize, radius: i64, symmetric: bool) -> Polytope {
    let bounds: Vec<(Rat, Rat)> = (0..d)
        .map(|_| {
            if symmetric {
                let h = rng.gen_range(1..=radius);
                (int(-h), int(h))
            } else {
                let lo = rng.gen_range(-radius..radius);
                let hi = rng.gen_range(lo + 1..=radius);
                (int(lo), int(hi))
            }
        })
        .collect();
    Polytope::axis_box(&bounds).expect("valid box")
}

/// Random tetrahedron with integer vertices, retried until full-dimensional.
pub fn random_simplex3<R: Rng>(rng: &mut R, radius: i64) -> Polytope {
    loop {
        let pts: Vec<Vector> = (0..4).map(|_| random_point(rng, 3, radius)).collect();
        if let Ok(p) = build_polytope(&pts, None) {
            if p.vertices().len() == 4 {
                return p;
            }
        }
    }
}

/// The polygon translated so that the origin sits at `point`.
pub fn recentred(p: &Polytope, point: &Vector) -> Result<Polytope> {
    p.translate(&-point)
}

/// An interior point: the average of the vertices.
pub fn vertex_centroid(p: &Polytope) -> Vector {
    let n = int(p.vertices().len() as i64);
    p.vertices()
        .iter()
        .fold(Vector::zero(p.dim()), |acc, v| &acc + v)
        .scale(&(int(1) / n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::is_origin_symmetric;
    use rand::SeedableRng;

    #[test]
    fn shapes() {
        assert_eq!(triangle().vertices().len(), 3);
        let ico = icosahedron();
        assert_eq!(ico.vertices().len(), 12);
        assert_eq!(ico.facets().len(), 20);
        assert_eq!(ico.edges().len(), 30);
        assert!(is_origin_symmetric(&ico));
        assert!(is_origin_symmetric(&skew_hexagon()));
        assert_eq!(simplex3().facets().len(), 4);
    }

    #[test]
    fn random_symmetric_is_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            assert!(is_origin_symmetric(&random_symmetric_polygon(&mut rng, 4, 9)));
        }
        assert_eq!(random_symmetric_polygon_exact(&mut rng, 4, 20).vertices().len(), 8);
    }
}
