//! Sampled boundaries of `IP` as CSV polylines (d = 2) and OFF meshes (d = 3).

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::Signed;
use rayon::prelude::*;

use crate::catalog::icosahedron_vertices;
use crate::error::{Error, Result};
use crate::hull::spatial_hull_facets;
use crate::polytope::Polytope;
use crate::radial::radial_value;
use crate::rational::{approx, fmt_decimal, fmt_rat, rat, Rat};
use crate::vector::{det3, Vector};

pub const MIN_SAMPLES: usize = 8;

/// Boundary point `rho(u) u` for one sampled direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySample {
    pub direction: Vector,
    pub point: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mesh {
    pub vertices: Vec<BoundarySample>,
    pub faces: Vec<[usize; 3]>,
}

fn check_samples(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::DegenerateInput(format!("need at least {MIN_SAMPLES} samples, got {n}")));
    }
    Ok(())
}

fn sample(p: &Polytope, u: Vector) -> Result<BoundarySample> {
    let r = radial_value(p, &u)?;
    Ok(BoundarySample {
        point: u.scale(&r),
        direction: u,
    })
}

/// `n` directions `(cos, sin)` at angles `2 pi k / n`, rounded to rationals
/// with denominator `10^6`. Radial points do not depend on the length of
/// the direction, so rounding only perturbs the angle.
pub fn planar_directions(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            Vector::new(vec![approx(theta.cos(), 1_000_000), approx(theta.sin(), 1_000_000)])
        })
        .collect()
}

pub fn boundary_2d(p: &Polytope, n: usize) -> Result<Vec<BoundarySample>> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    check_samples(n)?;
    planar_directions(n).into_par_iter().map(|u| sample(p, u)).collect()
}

/// Direction mesh: the icosahedron with repeated midpoint subdivision until
/// it has at least `n` vertices. Directions are left unnormalized.
pub fn icosphere_directions(n: usize) -> (Vec<Vector>, Vec<[usize; 3]>) {
    let mut verts = icosahedron_vertices();
    let mut faces: Vec<[usize; 3]> = spatial_hull_facets(&verts)
        .into_iter()
        .map(|f| {
            let (a, b, c) = (f[0], f[1], f[2]);
            // outward orientation
            if det3(&(&verts[b] - &verts[a]), &(&verts[c] - &verts[a]), &verts[a]).is_negative() {
                [a, c, b]
            } else {
                [a, b, c]
            }
        })
        .collect();
    while verts.len() < n {
        let mut midpoint: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        let mut mid = |i: usize, j: usize, verts: &mut Vec<Vector>| {
            let key = (i.min(j), i.max(j));
            *midpoint.entry(key).or_insert_with(|| {
                verts.push((&verts[i] + &verts[j]).scale(&rat(1, 2)));
                verts.len() - 1
            })
        };
        let mut next = Vec::with_capacity(faces.len() * 4);
        for [a, b, c] in faces {
            let ab = mid(a, b, &mut verts);
            let bc = mid(b, c, &mut verts);
            let ca = mid(c, a, &mut verts);
            next.extend([[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]);
        }
        faces = next;
    }
    (verts, faces)
}

pub fn boundary_3d(p: &Polytope, n: usize) -> Result<Mesh> {
    if p.dim() != 3 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    check_samples(n)?;
    let (dirs, faces) = icosphere_directions(n);
    let vertices = dirs
        .into_par_iter()
        .map(|u| sample(p, u))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mesh { vertices, faces })
}

fn fmt_value(r: &Rat, exact: bool) -> String {
    if exact {
        fmt_rat(r)
    } else {
        fmt_decimal(r)
    }
}

/// `index,x,y` rows with a header line.
pub fn to_csv(samples: &[BoundarySample], exact: bool) -> String {
    let mut out = String::from("index,x,y\n");
    for (k, s) in samples.iter().enumerate() {
        let coords: Vec<String> = s.point.coords().iter().map(|c| fmt_value(c, exact)).collect();
        let _ = writeln!(out, "{k},{}", coords.join(","));
    }
    out
}

pub fn to_off(mesh: &Mesh, exact: bool) -> String {
    let mut out = format!("OFF\n{} {} 0\n", mesh.vertices.len(), mesh.faces.len());
    for s in &mesh.vertices {
        let coords: Vec<String> = s.point.coords().iter().map(|c| fmt_value(c, exact)).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    for [a, b, c] in &mesh.faces {
        let _ = writeln!(out, "3 {a} {b} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::vector;

    #[test]
    fn square_axis_points() {
        let pts = boundary_2d(&catalog::square(), 8).unwrap();
        for target in [vector![2, 0], vector![0, 2], vector![-2, 0], vector![0, -2]] {
            assert!(pts.iter().any(|s| s.point == target), "missing {target}");
        }
        assert!(boundary_2d(&catalog::square(), 7).is_err());
    }

    #[test]
    fn icosphere_sizes() {
        assert_eq!(icosphere_directions(12).0.len(), 12);
        let (v, f) = icosphere_directions(13);
        assert_eq!((v.len(), f.len()), (42, 80));
    }

    #[test]
    fn off_header() {
        let mesh = boundary_3d(&catalog::cube(3, -1, 1), 12).unwrap();
        let off = to_off(&mesh, false);
        assert!(off.starts_with("OFF\n12 20 0\n"));
        let csv = to_csv(&boundary_2d(&catalog::square(), 8).unwrap(), true);
        assert!(csv.lines().nth(1).unwrap().starts_with("0,2,0"));
    }
}
