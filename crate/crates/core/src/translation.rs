//! The affine arrangement `L(P)` of translation vectors, regions of its
//! complement, and the behaviour of `rho_{I(P+t)}` as `t` moves in a region.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{cocircuit_of, enumerate_chambers, Sign, SignVector};
use crate::error::{Error, Result};
use crate::linalg::{hyperplane_through, solve_exact};
use crate::poly::{MPoly, VarKind};
use crate::polytope::Polytope;
use crate::radial::radial_value;
use crate::rational::{int, Rat};
use crate::vector::Vector;

/// `{t : <normal, t> = offset}`, the affine span of `-v` over the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineHyperplane {
    pub normal: Vector,
    #[serde(with = "crate::rational::serde_rat")]
    pub offset: Rat,
    pub generators: Vec<usize>,
}

impl AffineHyperplane {
    /// `<normal, t> - offset`.
    pub fn eval(&self, t: &Vector) -> Rat {
        self.normal.dot(t) - &self.offset
    }
}

/// An open region of the complement of `L(P)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Region {
    #[serde(serialize_with = "serialize_signs")]
    pub signs: Vec<Sign>,
    pub witness: Vector,
}

fn serialize_signs<S: serde::Serializer>(signs: &[Sign], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&signs_string(signs))
}

fn signs_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

impl Region {
    pub fn label(&self) -> String {
        signs_string(&self.signs)
    }

    /// Whether two regions are the same cell (cells are convex, so the
    /// sign vector identifies them).
    pub fn same_cell(&self, other: &Region) -> bool {
        self.signs == other.signs
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// One hyperplane per affinely independent `d`-subset of `-vertices(P)`,
/// deduplicated. Each keeps the first generating subset in lexicographic
/// order; normals are primitive with a positive leading non-zero entry.
pub fn affine_arrangement(p: &Polytope) -> Vec<AffineHyperplane> {
    let negated: Vec<Vector> = p.vertices().iter().map(|v| -v).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for subset in subsets(negated.len(), p.dim()) {
        let pts: Vec<Vector> = subset.iter().map(|&i| negated[i].clone()).collect();
        let Some((mut normal, mut offset)) = hyperplane_through(&pts) else {
            continue;
        };
        if normal.coords().iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            normal = -&normal;
            offset = -offset;
        }
        if seen.insert((normal.clone(), offset.clone())) {
            out.push(AffineHyperplane {
                normal,
                offset,
                generators: subset,
            });
        }
    }
    out
}

/// The region containing `t`.
pub fn region_of(arrangement: &[AffineHyperplane], t: &Vector) -> Result<Region> {
    let signs = arrangement
        .iter()
        .enumerate()
        .map(|(i, h)| Sign::of(&h.eval(t)).ok_or(Error::OnHyperplane(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Region {
        signs,
        witness: t.clone(),
    })
}

/// Linear constraints `<a, t> + b > 0` describing an open cell.
#[derive(Debug, Clone)]
struct Constraint {
    a: Vector,
    b: Rat,
}

fn region_constraints(arrangement: &[AffineHyperplane], region: &Region) -> Vec<Constraint> {
    arrangement
        .iter()
        .zip(&region.signs)
        .map(|(h, s)| match s {
            Sign::Plus => Constraint {
                a: h.normal.clone(),
                b: -h.offset.clone(),
            },
            Sign::Minus => Constraint {
                a: -&h.normal,
                b: h.offset.clone(),
            },
        })
        .collect()
}

/// Half-width `h` of an axis box around `center` on which every constraint
/// stays strictly positive.
fn box_half_width(constraints: &[Constraint], center: &Vector) -> Result<Rat> {
    let mut h: Option<Rat> = None;
    for c in constraints {
        let slack = c.a.dot(center) + &c.b;
        if !slack.is_positive() {
            return Err(Error::ChamberMismatch(format!("{center} violates a cell constraint")));
        }
        let l1 = c.a.coords().iter().fold(Rat::zero(), |acc, v| acc + v.abs());
        if l1.is_zero() {
            continue;
        }
        let bound = slack / (int(2) * l1);
        h = Some(h.map_or(bound.clone(), |cur| cur.min(bound)));
    }
    Ok(h.unwrap_or_else(|| int(1)))
}

/// `count` rational points of `region`, drawn from a box around its witness.
pub fn sample_in_region<R: Rng>(
    arrangement: &[AffineHyperplane],
    region: &Region,
    count: usize,
    rng: &mut R,
) -> Result<Vec<Vector>> {
    let h = box_half_width(&region_constraints(arrangement, region), &region.witness)?;
    let d = region.witness.dim();
    let out: Vec<Vector> = (0..count)
        .map(|_| {
            let offset: Vec<Rat> = (0..d)
                .map(|_| &h * Rat::new(rng.gen_range(-999i64..=999).into(), 1000.into()))
                .collect();
            &region.witness + &Vector::new(offset)
        })
        .collect();
    for t in &out {
        debug_assert!(region_of(arrangement, t).is_ok_and(|r| r.same_cell(region)));
    }
    Ok(out)
}

/// Whether `H(P + t1)` and `H(P + t2)` have the same set of chamber sign
/// vectors. Both translations must avoid `L(P)`.
pub fn verify_cocircuit_stability(p: &Polytope, t1: &Vector, t2: &Vector) -> Result<bool> {
    let arrangement = affine_arrangement(p);
    region_of(&arrangement, t1)?;
    region_of(&arrangement, t2)?;
    let set = |t: &Vector| -> Result<BTreeSet<SignVector>> {
        Ok(enumerate_chambers(&p.translate(t)?)?
            .into_iter()
            .map(|c| c.cocircuit)
            .collect())
    };
    Ok(set(t1)? == set(t2)?)
}

fn monomials(nvars: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            go(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, max_degree, &mut vec![0; nvars], &mut out);
    out
}

fn monomial_value(e: &[u32], t: &Vector) -> Rat {
    let mut v = int(1);
    for (k, &p) in e.iter().enumerate() {
        for _ in 0..p {
            v *= &t[k];
        }
    }
    v
}

/// `t -> rho_{I(P+t)}(x)` on the part of `region` where `x` stays in the
/// chamber with sign vector `s`, recovered by exact interpolation on a
/// tensor grid of side `d` with total degree at most `d - 1`, and checked
/// on five held-out points.
pub fn radial_polynomial_in_t(p: &Polytope, region: &Region, s: &SignVector, x: &Vector) -> Result<MPoly> {
    let d = p.dim();
    let arrangement = affine_arrangement(p);
    let mut constraints = region_constraints(&arrangement, region);
    // x in the chamber s of H(P + t): sign(<v + t, x>) = s_v
    for (i, sign) in s.iter() {
        let base = p.vertex(i).dot(x);
        constraints.push(match sign {
            Sign::Plus => Constraint { a: x.clone(), b: base },
            Sign::Minus => Constraint { a: -x, b: -base },
        });
    }
    let center = &region.witness;
    let h = box_half_width(&constraints, center)?;
    let side = d;
    let nodes: Vec<Rat> = (0..side)
        .map(|k| {
            if side == 1 {
                Rat::zero()
            } else {
                &h * (int(2 * k as i64) / int(side as i64 - 1) - int(1))
            }
        })
        .collect();
    let mut grid: Vec<Vector> = vec![center.clone()];
    for axis in 0..d {
        grid = grid
            .into_iter()
            .flat_map(|t| {
                nodes.iter().map(move |n| {
                    let mut c = t.clone().into_coords();
                    c[axis] = &c[axis] + n;
                    Vector::new(c)
                })
            })
            .collect();
    }
    let held_out: Vec<Vector> = (1..=5i64)
        .map(|k| {
            let offs: Vec<Rat> = (0..d as i64)
                .map(|j| &h * (int((k * (j + 2)) % 7 - 3) / int(4)))
                .collect();
            center + &Vector::new(offs)
        })
        .collect();

    let sample = |t: &Vector| -> Result<Rat> {
        let moved = p.translate(t)?;
        match cocircuit_of(&moved, x) {
            Ok(sv) if &sv == s => radial_value(&moved, x),
            Ok(sv) => Err(Error::ChamberMismatch(format!("x lies in chamber {sv} at t = {t}"))),
            Err(_) => Err(Error::ChamberMismatch(format!("x lies on a wall at t = {t}"))),
        }
    };
    let values: Vec<Rat> = grid.par_iter().map(sample).collect::<Result<_>>()?;
    let checks: Vec<Rat> = held_out.par_iter().map(sample).collect::<Result<_>>()?;

    let bound = (d - 1) as u32;
    let basis = monomials(d, bound);
    let matrix: Vec<Vec<Rat>> = grid
        .iter()
        .map(|t| basis.iter().map(|e| monomial_value(e, t)).collect())
        .collect();
    let coeffs = solve_exact(&matrix, &values).ok_or(Error::DegreeExceeded { bound: d - 1 })?;
    let poly = MPoly::from_terms(d, basis.into_iter().zip(coeffs)).with_kind(VarKind::T);
    for (t, v) in held_out.iter().zip(&checks) {
        if &poly.eval_at(t) != v {
            return Err(Error::DegreeExceeded { bound: d - 1 });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::build_polygon;
    use crate::vector;

    fn triangle() -> Polytope {
        build_polygon(&[vector![0, 1], vector![-1, -1], vector![1, -1]]).unwrap()
    }

    fn square() -> Polytope {
        build_polygon(&[vector![-1, -1], vector![1, -1], vector![1, 1], vector![-1, 1]]).unwrap()
    }

    #[test]
    fn triangle_lines() {
        let lines = affine_arrangement(&triangle());
        assert_eq!(lines.len(), 3);
        // y = 1, y = 2x - 1, y = -2x - 1
        for (a, b, c) in [(0, 1, 1), (-2, 1, -1), (2, 1, -1)] {
            let n = vector![a, b];
            assert!(lines.iter().any(|h| {
                let k = &h.normal[1] / &n[1];
                h.normal == n.scale(&k) && h.offset == int(c) * k
            }));
        }
    }

    #[test]
    fn square_has_six_lines() {
        assert_eq!(affine_arrangement(&square()).len(), 6);
    }

    #[test]
    fn regions_of_triangle() {
        let l = affine_arrangement(&triangle());
        let r0 = region_of(&l, &vector![0, 0]).unwrap();
        let r1 = region_of(&l, &vector![0, 2]).unwrap();
        let r2 = region_of(&l, &vector![0, -2]).unwrap();
        assert!(!r0.same_cell(&r1) && !r1.same_cell(&r2) && !r0.same_cell(&r2));
        let on = region_of(&l, &vector![0, 1]).unwrap_err();
        let Error::OnHyperplane(i) = on else { panic!() };
        assert_eq!(l[i].normal, vector![0, 1]);
    }

    #[test]
    fn stability() {
        let t = triangle();
        assert!(verify_cocircuit_stability(&t, &vector![0, 2], &Vector::new(vec![crate::rational::rat(1, 10), int(2)])).unwrap());
        assert!(verify_cocircuit_stability(&t, &vector![0, 2], &vector![0, -2]).unwrap());
        assert!(verify_cocircuit_stability(&t, &vector![3, 4], &vector![3, 4]).unwrap());
    }

    #[test]
    fn arrangement_shifts_with_translation() {
        let t = triangle();
        let shift = vector![2, -3];
        let moved = affine_arrangement(&t.translate(&shift).unwrap());
        for (h, g) in affine_arrangement(&t).iter().zip(&moved) {
            assert_eq!(h.normal, g.normal);
            assert_eq!(&h.offset - h.normal.dot(&shift), g.offset);
        }
    }

    #[test]
    fn degree_in_t() {
        let t = triangle();
        let l = affine_arrangement(&t);
        let x = vector![0, 1];
        let region = region_of(&l, &vector![0, 2]).unwrap();
        let s = cocircuit_of(&t.translate(&vector![0, 2]).unwrap(), &x).unwrap();
        let poly = radial_polynomial_in_t(&t, &region, &s, &x).unwrap();
        assert!(poly.total_degree().unwrap_or(0) <= 1);

        let sq = square();
        let l = affine_arrangement(&sq);
        let x = vector![1, 0];
        let region = region_of(&l, &Vector::new(vec![crate::rational::rat(1, 10), crate::rational::rat(1, 20)])).unwrap();
        let s = cocircuit_of(&sq.translate(&region.witness).unwrap(), &x).unwrap();
        let poly = radial_polynomial_in_t(&sq, &region, &s, &x).unwrap();
        assert_eq!(poly, MPoly::constant(2, int(2)).with_kind(VarKind::T));
    }

    #[test]
    fn cube_degree_two() {
        let cube = Polytope::axis_box(&vec![(int(-1), int(1)); 3]).unwrap();
        let l = affine_arrangement(&cube);
        let t0 = Vector::new(vec![crate::rational::rat(1, 7), crate::rational::rat(1, 11), crate::rational::rat(1, 13)]);
        let region = region_of(&l, &t0).unwrap();
        let x = vector![3, 2, 1];
        let s = cocircuit_of(&cube.translate(&t0).unwrap(), &x).unwrap();
        let poly = radial_polynomial_in_t(&cube, &region, &s, &x).unwrap();
        assert!(poly.total_degree().unwrap_or(0) <= 2);
    }
}
