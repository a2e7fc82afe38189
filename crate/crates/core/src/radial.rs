//! The radial function `rho(x) = vol_{d-1}(P ∩ x⊥) / |x|`: exact values by
//! the determinant formula, symbolic pieces on chambers, and a float oracle.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{enumerate_chambers, Chamber};
use crate::error::{Error, Result};
use crate::poly::{det, MPoly};
use crate::polytope::{Polytope, SectionPoint};
use crate::rational::{int, Rat};
use crate::vector::{det2, det3, Vector};

/// One simplex of the boundary triangulation of a section, coned to form a
/// term `sign * det[rows; x]`. Rows are `point - apex` for each boundary
/// point, or the points themselves when there is no apex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionSimplex {
    pub points: Vec<SectionPoint>,
    pub apex: Option<SectionPoint>,
    pub sign: i8,
}

impl SectionSimplex {
    /// `det M` at `x`, given the coordinates of the section points at `x`.
    pub fn det_at(&self, coords: &BTreeMap<SectionPoint, Vector>, x: &Vector) -> Rat {
        let apex = self.apex.map(|a| coords[&a].clone());
        let rows: Vec<Vector> = self
            .points
            .iter()
            .map(|p| match &apex {
                Some(a) => &coords[p] - a,
                None => coords[p].clone(),
            })
            .collect();
        match x.dim() {
            2 => det2(&rows[0], x),
            _ => det3(&rows[0], &rows[1], x),
        }
    }
}

fn factorial(n: usize) -> Rat {
    (1..=n as i64).fold(Rat::one(), |acc, k| acc * int(k))
}

fn check_direction(p: &Polytope, x: &Vector) -> Result<()> {
    if x.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: x.dim(),
        });
    }
    if x.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if p.dim() > 3 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    Ok(())
}

/// Triangulates the ordered section points at `x`. Empty when the section
/// has dimension below `d - 1`.
fn simplices_from_section(points: &[(SectionPoint, Vector)], x: &Vector) -> Vec<SectionSimplex> {
    match x.dim() {
        2 => {
            if points.len() < 2 {
                return Vec::new();
            }
            let s = if det2(&(&points[0].1 - &points[1].1), x).is_negative() { -1 } else { 1 };
            vec![
                SectionSimplex {
                    points: vec![points[0].0],
                    apex: None,
                    sign: s,
                },
                SectionSimplex {
                    points: vec![points[1].0],
                    apex: None,
                    sign: -s,
                },
            ]
        }
        _ => {
            if points.len() < 3 {
                return Vec::new();
            }
            let start = (0..points.len())
                .min_by_key(|&i| points[i].0.key())
                .unwrap_or(0);
            let mut cycle = points.to_vec();
            cycle.rotate_left(start);
            let apex = &cycle[0];
            (1..cycle.len() - 1)
                .map(|i| {
                    let d = det3(&(&cycle[i].1 - &apex.1), &(&cycle[i + 1].1 - &apex.1), x);
                    SectionSimplex {
                        points: vec![cycle[i].0, cycle[i + 1].0],
                        apex: Some(apex.0),
                        sign: if d.is_negative() { -1 } else { 1 },
                    }
                })
                .collect()
        }
    }
}

/// Boundary triangulation of the section at the chamber's witness. For
/// `d = 3` it is a fan from the section point with the smallest key.
pub fn triangulate_section(p: &Polytope, chamber: &Chamber) -> Result<Vec<SectionSimplex>> {
    check_direction(p, &chamber.witness)?;
    let points = p.section_points(&chamber.witness)?;
    let simplices = simplices_from_section(&points, &chamber.witness);
    if simplices.is_empty() {
        return Err(Error::EmptySection);
    }
    Ok(simplices)
}

/// Exact `rho_{IP}(x)`. Valid on walls too; sections of dimension below
/// `d - 1` give 0.
pub fn radial_value(p: &Polytope, x: &Vector) -> Result<Rat> {
    check_direction(p, x)?;
    let points = match p.section_points(x) {
        Ok(points) => points,
        Err(Error::EmptySection) => return Ok(Rat::zero()),
        Err(e) => return Err(e),
    };
    let simplices = simplices_from_section(&points, x);
    let coords: BTreeMap<SectionPoint, Vector> = points.into_iter().collect();
    let sum = simplices.iter().fold(Rat::zero(), |acc, s| {
        let d = s.det_at(&coords, x);
        if s.sign < 0 {
            acc - d
        } else {
            acc + d
        }
    });
    Ok(sum / (factorial(p.dim() - 1) * x.norm_squared()))
}

/// Float `rho_{IP}(x)` from an orthonormal basis of `x⊥` and the shoelace
/// formula. Shares only the section vertices with [`radial_value`].
pub fn radial_oracle(p: &Polytope, x: &Vector) -> Result<f64> {
    check_direction(p, x)?;
    let points = match p.cross_section(x) {
        Ok(points) => points,
        Err(Error::EmptySection) => return Ok(0.0),
        Err(e) => return Err(e),
    };
    let xf = x.to_f64();
    let norm = xf.iter().map(|c| c * c).sum::<f64>().sqrt();
    // shift exactly to a local origin so small sections keep their digits
    let base = points[0].clone();
    let pts: Vec<Vec<f64>> = points.iter().map(|q| (q - &base).to_f64()).collect();
    let dist = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(u, v)| (u - v) * (u - v)).sum::<f64>().sqrt();
    let volume = if p.dim() == 2 {
        let mut longest = 0.0f64;
        for a in &pts {
            for b in &pts {
                longest = longest.max(dist(a, b));
            }
        }
        longest
    } else {
        if pts.len() < 3 {
            return Ok(0.0);
        }
        let (u, w) = orthonormal_complement(&xf);
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(s, t)| s * t).sum::<f64>();
        let mut flat: Vec<(f64, f64)> = pts.iter().map(|q| (dot(q, &u), dot(q, &w))).collect();
        let n = flat.len() as f64;
        let cx = flat.iter().map(|q| q.0).sum::<f64>() / n;
        let cy = flat.iter().map(|q| q.1).sum::<f64>() / n;
        flat.sort_by(|a, b| {
            let ta = (a.1 - cy).atan2(a.0 - cx);
            let tb = (b.1 - cy).atan2(b.0 - cx);
            ta.total_cmp(&tb)
        });
        let mut twice = 0.0;
        for i in 0..flat.len() {
            let (a, b) = (flat[i], flat[(i + 1) % flat.len()]);
            twice += a.0 * b.1 - a.1 * b.0;
        }
        twice.abs() / 2.0
    };
    Ok(volume / norm)
}

/// Two orthonormal vectors spanning the complement of a non-zero 3-vector.
fn orthonormal_complement(x: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
    let n: Vec<f64> = x.iter().map(|c| c / norm(x)).collect();
    // the axis least aligned with n
    let axis = (0..3)
        .min_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()))
        .unwrap_or(0);
    let mut e = [0.0; 3];
    e[axis] = 1.0;
    let proj: f64 = e.iter().zip(&n).map(|(a, b)| a * b).sum();
    let u: Vec<f64> = e.iter().zip(&n).map(|(a, b)| a - proj * b).collect();
    let u: Vec<f64> = u.iter().map(|c| c / norm(&u)).collect();
    let w = vec![
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    ];
    (u, w)
}

/// `rho` restricted to one open chamber: `rho = p / (|x|^2 q)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialPiece {
    pub chamber: Chamber,
    /// Numerator, a multiple of `|x|^2`.
    pub p: MPoly,
    /// Denominator, positive on the chamber.
    pub q: MPoly,
    /// Primitive multiple of `q - p / |x|^2`; negative inside `IP`.
    pub boundary: MPoly,
    /// Crossed edges whose linear forms `<b - a, x>` remain in `q`.
    pub denominator_edges: Vec<(usize, usize)>,
}

impl RadialPiece {
    /// `p / |x|^2`.
    pub fn reduced_numerator(&self) -> MPoly {
        let n = self.p.nvars();
        self.p
            .exact_div(&MPoly::norm_squared(n))
            .unwrap_or_else(|| MPoly::zero(n))
    }

    /// Value of the piece at `x`, or `None` where `q` vanishes.
    pub fn eval(&self, x: &Vector) -> Option<Rat> {
        let q = self.q.eval_at(x);
        if q.is_zero() {
            return None;
        }
        Some(self.p.eval_at(x) / (x.norm_squared() * q))
    }

    pub fn degree(&self) -> u32 {
        self.boundary.total_degree().unwrap_or(0)
    }
}

/// A section point as a vector of polynomial numerators over an optional
/// linear denominator `<b - a, x>` of a crossed edge.
struct SymbolicPoint {
    numerator: Vec<MPoly>,
    denominator: Option<(usize, usize)>,
}

fn symbolic_point(p: &Polytope, sp: SectionPoint) -> Result<SymbolicPoint> {
    let d = p.dim();
    match sp {
        SectionPoint::Edge(a, b) => {
            let (va, vb) = (p.vertex(a), p.vertex(b));
            let (la, lb) = (MPoly::linear(va), MPoly::linear(vb));
            let numerator = (0..d).map(|k| &lb.scale(&va[k]) - &la.scale(&vb[k])).collect();
            Ok(SymbolicPoint {
                numerator,
                denominator: Some((a, b)),
            })
        }
        SectionPoint::Vertex(i) if p.vertex(i).is_zero() => Ok(SymbolicPoint {
            numerator: vec![MPoly::zero(d); d],
            denominator: None,
        }),
        SectionPoint::Vertex(i) => Err(Error::OnWall(i)),
    }
}

/// Symbolic piece of `rho` on an open chamber, expanded over the common
/// denominator of the crossed edges, checked for divisibility by `|x|^2`,
/// then reduced by cancelling common linear factors.
pub fn chamber_radial_piece(p: &Polytope, chamber: &Chamber) -> Result<RadialPiece> {
    let d = p.dim();
    let w = &chamber.witness;
    let simplices = triangulate_section(p, chamber)?;
    let points = p.section_points(w)?;
    let mut symbolic: BTreeMap<SectionPoint, SymbolicPoint> = BTreeMap::new();
    for (sp, _) in &points {
        symbolic.insert(*sp, symbolic_point(p, *sp)?);
    }
    let denominators: Vec<((usize, usize), MPoly)> = symbolic
        .values()
        .filter_map(|s| s.denominator)
        .map(|(a, b)| ((a, b), MPoly::linear(&(p.vertex(b) - p.vertex(a)))))
        .collect();
    let xs: Vec<MPoly> = (0..d).map(|i| MPoly::var(d, i)).collect();

    let mut total = MPoly::zero(d);
    for s in &simplices {
        // multilinear expansion of the rows `point - apex`
        let mut combos: Vec<(Vec<SectionPoint>, Rat)> = vec![(s.points.clone(), Rat::one())];
        if let Some(apex) = s.apex {
            for k in 0..s.points.len() {
                let mut pts = s.points.clone();
                pts[k] = apex;
                combos.push((pts, -Rat::one()));
            }
        }
        for (pts, coef) in combos {
            let mut seen = pts.clone();
            seen.sort();
            seen.dedup();
            if seen.len() < pts.len() {
                continue;
            }
            let mut m: Vec<Vec<MPoly>> = pts.iter().map(|sp| symbolic[sp].numerator.clone()).collect();
            m.push(xs.clone());
            let mut term = det(&m);
            if term.is_zero() {
                continue;
            }
            let used: Vec<(usize, usize)> = pts.iter().filter_map(|sp| symbolic[sp].denominator).collect();
            for (edge, l) in &denominators {
                if !used.contains(edge) {
                    term = &term * l;
                }
            }
            let factor = if s.sign < 0 { -coef } else { coef };
            total = &total + &term.scale(&factor);
        }
    }
    let mut p_num = total.scale(&(Rat::one() / factorial(d - 1)));
    let mut q = denominators.iter().fold(MPoly::one(d), |acc, (_, l)| &acc * l);
    let norm = MPoly::norm_squared(d);
    let mut n = p_num.exact_div(&norm).ok_or(Error::DivisibilityFailure)?;
    let mut remaining: Vec<(usize, usize)> = denominators.iter().map(|(e, _)| *e).collect();
    for (edge, l) in &denominators {
        if let (Some(n2), Some(q2)) = (n.exact_div(l), q.exact_div(l)) {
            n = n2;
            q = q2;
            remaining.retain(|e| e != edge);
        }
    }
    if q.eval_at(w).is_negative() {
        n = -&n;
        q = -&q;
    }
    p_num = &n * &norm;
    let q_w = q.eval_at(w);
    let expected = radial_value(p, w)?;
    if q_w.is_zero() || n.eval_at(w) / q_w != expected {
        return Err(Error::Internal(format!(
            "piece disagrees with the radial value at {w}"
        )));
    }
    let boundary = (&q - &n).primitive();
    Ok(RadialPiece {
        chamber: chamber.clone(),
        p: p_num,
        q,
        boundary,
        denominator_edges: remaining,
    })
}

/// Pieces on every chamber whose section is full-dimensional, in chamber order.
pub fn radial_pieces(p: &Polytope) -> Result<Vec<RadialPiece>> {
    let chambers = enumerate_chambers(p)?;
    let results: Vec<Result<RadialPiece>> = chambers.par_iter().map(|c| chamber_radial_piece(p, c)).collect();
    results
        .into_iter()
        .filter(|r| !matches!(r, Err(Error::EmptySection)))
        .collect()
}
