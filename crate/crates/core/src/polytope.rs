//! Polytopes in vertex representation with facet combinatorics, and their
//! sections by hyperplanes through the origin.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{canonical_start, is_full_dimensional, planar_hull, spatial_hull_facets};
use crate::linalg::{nullspace, rank};
use crate::rational::{int, Rat};
use crate::vector::{det2, det3, Vector};

/// A facet with its inward normal: `<normal, y> >= offset` on the polytope,
/// with equality exactly on the facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vector,
    pub offset: Rat,
}

impl Facet {
    /// Signed slack of `y`: positive strictly inside the facet's halfspace.
    pub fn slack(&self, y: &Vector) -> Rat {
        self.normal.dot(y) - &self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
    edges: Vec<(usize, usize)>,
    facets: Vec<Facet>,
}

/// Where the origin sits relative to a polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "position", content = "face", rename_all = "snake_case")]
pub enum OriginPosition {
    Interior,
    /// Relative interior of the facet with this index.
    FacetInterior(usize),
    /// Relative interior of a face of dimension below `d - 1`, given by its vertex indices.
    LowerFace(Vec<usize>),
    Outside,
}

/// A point of `P ∩ x⊥`: either a vertex of `P` lying on the hyperplane or
/// the transversal crossing of an edge `{a, b}` (vertex indices, `a < b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionPoint {
    Vertex(usize),
    Edge(usize, usize),
}

impl SectionPoint {
    /// Lexicographic key shared by both kinds, used to pick fan apexes.
    pub fn key(&self) -> (usize, usize) {
        match *self {
            SectionPoint::Vertex(i) => (i, i),
            SectionPoint::Edge(a, b) => (a, b),
        }
    }
}

/// Convex hull of planar points with counterclockwise vertex order starting
/// at the topmost (then leftmost) vertex. Interior points and duplicates are
/// discarded.
pub fn build_polygon(points: &[Vector]) -> Result<Polytope> {
    check_dims(points, 2)?;
    let mut hull = planar_hull(points);
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("points are collinear".into()));
    }
    canonical_start(&mut hull);
    let n = hull.len();
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let facets = edges
        .iter()
        .map(|&(i, j)| {
            let normal = (&hull[j] - &hull[i]).rot90().primitive();
            let offset = normal.dot(&hull[i]);
            Facet {
                vertices: vec![i, j],
                normal,
                offset,
            }
        })
        .collect();
    Ok(Polytope {
        dim: 2,
        vertices: hull,
        edges,
        facets,
    })
}

/// Polytope of dimension `d >= 2` from vertices and optional facet vertex
/// sets. In the plane this is [`build_polygon`]. In dimension 3 the facets
/// may be omitted and are then computed from the convex hull, discarding
/// non-extreme points. Higher dimensions require facets.
pub fn build_polytope(points: &[Vector], facets: Option<&[Vec<usize>]>) -> Result<Polytope> {
    let dim = points
        .first()
        .ok_or_else(|| Error::DegenerateInput("no vertices".into()))?
        .dim();
    check_dims(points, dim)?;
    match (dim, facets) {
        (0 | 1, _) => Err(Error::UnsupportedDimension(dim)),
        (2, _) => build_polygon(points),
        (3, None) => {
            let mut pts: Vec<Vector> = Vec::with_capacity(points.len());
            for p in points {
                if !pts.contains(p) {
                    pts.push(p.clone());
                }
            }
            if !is_full_dimensional(&pts) {
                return Err(Error::DegenerateInput("points are coplanar".into()));
            }
            let raw = spatial_hull_facets(&pts);
            let incident = incidence(&pts, &raw);
            let extreme: Vec<usize> = (0..pts.len())
                .filter(|&i| {
                    let normals: Vec<Vector> = incident[i].iter().map(|&f| facet_plane(&pts, &raw[f]).0).collect();
                    rank(&normals) == dim
                })
                .collect();
            let reindex = |i: usize| extreme.iter().position(|&e| e == i);
            let verts: Vec<Vector> = extreme.iter().map(|&i| pts[i].clone()).collect();
            let facets: Vec<Vec<usize>> = raw
                .iter()
                .map(|f| f.iter().filter_map(|&i| reindex(i)).collect())
                .collect();
            from_facets(verts, &facets)
        }
        (_, None) => Err(Error::UnsupportedDimension(dim)),
        (_, Some(facets)) => from_facets(points.to_vec(), facets),
    }
}

fn check_dims(points: &[Vector], dim: usize) -> Result<()> {
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    Ok(())
}

fn incidence(points: &[Vector], facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut incident = vec![Vec::new(); points.len()];
    for (f, verts) in facets.iter().enumerate() {
        for &v in verts {
            incident[v].push(f);
        }
    }
    incident
}

/// Unoriented plane through the facet's vertices (assumes validity).
fn facet_plane(points: &[Vector], facet: &[usize]) -> (Vector, Rat) {
    let base = &points[facet[0]];
    let diffs: Vec<Vector> = facet[1..].iter().map(|&i| &points[i] - base).collect();
    let normal = nullspace(&diffs, base.dim()).remove(0).primitive();
    let offset = normal.dot(base);
    (normal, offset)
}

fn from_facets(vertices: Vec<Vector>, facet_sets: &[Vec<usize>]) -> Result<Polytope> {
    let dim = vertices[0].dim();
    let invalid = |msg: String| Err(Error::InvalidCombinatorics(msg));
    for i in 0..vertices.len() {
        if vertices[i + 1..].contains(&vertices[i]) {
            return invalid(format!("vertex {i} is repeated"));
        }
    }
    if !is_full_dimensional(&vertices) {
        return Err(Error::DegenerateInput("vertices are not full-dimensional".into()));
    }
    let mut facets = Vec::with_capacity(facet_sets.len());
    for (f, set) in facet_sets.iter().enumerate() {
        let mut set = set.clone();
        set.sort_unstable();
        set.dedup();
        if let Some(&bad) = set.iter().find(|&&i| i >= vertices.len()) {
            return invalid(format!("facet {f} references missing vertex {bad}"));
        }
        if set.len() < dim {
            return invalid(format!("facet {f} has fewer than {dim} vertices"));
        }
        let base = &vertices[set[0]];
        let diffs: Vec<Vector> = set[1..].iter().map(|&i| &vertices[i] - base).collect();
        let r = rank(&diffs);
        if r == dim {
            return invalid(format!("facet {f} vertices are not coplanar"));
        }
        if r < dim - 1 {
            return invalid(format!("facet {f} is lower-dimensional"));
        }
        let (mut normal, mut offset) = facet_plane(&vertices, &set);
        let sides: Vec<Ordering> = vertices
            .iter()
            .map(|v| (normal.dot(v) - &offset).cmp(&Rat::zero()))
            .collect();
        let above = sides.contains(&Ordering::Greater);
        let below = sides.contains(&Ordering::Less);
        if above && below {
            return invalid(format!("facet {f} does not support the polytope"));
        }
        if below {
            normal = -normal;
            offset = -offset;
        }
        let on: Vec<usize> = (0..vertices.len()).filter(|&i| sides[i] == Ordering::Equal).collect();
        if on != set {
            return invalid(format!("facet {f} omits vertices lying on its plane"));
        }
        facets.push(Facet {
            vertices: set,
            normal,
            offset,
        });
    }
    let incident = incidence(&vertices, &facets.iter().map(|f| f.vertices.clone()).collect::<Vec<_>>());
    for (i, fs) in incident.iter().enumerate() {
        let normals: Vec<Vector> = fs.iter().map(|&f| facets[f].normal.clone()).collect();
        if rank(&normals) < dim {
            return invalid(format!("vertex {i} is not extreme"));
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let normals: Vec<Vector> = incident[i]
                .iter()
                .filter(|f| incident[j].contains(f))
                .map(|&f| facets[f].normal.clone())
                .collect();
            if rank(&normals) == dim - 1 {
                edges.push((i, j));
            }
        }
    }
    Ok(Polytope {
        dim,
        vertices,
        edges,
        facets,
    })
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector {
        &self.vertices[i]
    }

    /// Edges as vertex index pairs. For polygons edge `k` runs from vertex
    /// `k` to vertex `k + 1` counterclockwise; otherwise pairs are sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices.clone()).collect()
    }

    /// Index of the edge joining `a` and `b`, in either orientation.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(i, j)| (i, j) == (a, b) || (i, j) == (b, a))
    }

    /// Indices of vertices equal to the origin (at most one).
    pub fn origin_vertex(&self) -> Option<usize> {
        self.vertices.iter().position(Vector::is_zero)
    }

    /// `P + t`, same combinatorics.
    pub fn translate(&self, t: &Vector) -> Result<Polytope> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: t.dim(),
            });
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v + t).collect(),
            edges: self.edges.clone(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    vertices: f.vertices.clone(),
                    normal: f.normal.clone(),
                    offset: &f.offset + f.normal.dot(t),
                })
                .collect(),
        })
    }

    /// `-P`, same combinatorics.
    pub fn negate(&self) -> Polytope {
        Polytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| -v).collect(),
            edges: self.edges.clone(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    vertices: f.vertices.clone(),
                    normal: -&f.normal,
                    offset: f.offset.clone(),
                })
                .collect(),
        }
    }

    /// Exact position of the origin from the facet inequalities.
    pub fn origin_position(&self) -> OriginPosition {
        let zero = Vector::zero(self.dim);
        let mut tight = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let s = f.slack(&zero);
            if s.is_negative() {
                return OriginPosition::Outside;
            }
            if s.is_zero() {
                tight.push(i);
            }
        }
        match tight.as_slice() {
            [] => OriginPosition::Interior,
            [f] => OriginPosition::FacetInterior(*f),
            _ => {
                let face: Vec<usize> = (0..self.vertices.len())
                    .filter(|v| tight.iter().all(|&f| self.facets[f].vertices.contains(v)))
                    .collect();
                OriginPosition::LowerFace(face)
            }
        }
    }

    /// Tagged points of `P ∩ x⊥` in cyclic (d = 3) or linear (d = 2) order.
    pub fn section_points(&self, x: &Vector) -> Result<Vec<(SectionPoint, Vector)>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        if x.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let heights: Vec<Rat> = self.vertices.iter().map(|v| v.dot(x)).collect();
        if heights.iter().all(Signed::is_positive) || heights.iter().all(Signed::is_negative) {
            return Err(Error::EmptySection);
        }
        let mut points: Vec<(SectionPoint, Vector)> = Vec::new();
        for (i, h) in heights.iter().enumerate() {
            if h.is_zero() {
                points.push((SectionPoint::Vertex(i), self.vertices[i].clone()));
            }
        }
        for &(i, j) in &self.edges {
            let (hi, hj) = (&heights[i], &heights[j]);
            if (hi.is_positive() && hj.is_negative()) || (hi.is_negative() && hj.is_positive()) {
                let (a, b) = (i.min(j), i.max(j));
                let p = edge_crossing(&self.vertices[a], &self.vertices[b], &heights[a], &heights[b]);
                points.push((SectionPoint::Edge(a, b), p));
            }
        }
        order_section(&mut points, x);
        Ok(points)
    }

    /// Vertices of `P ∩ x⊥`.
    pub fn cross_section(&self, x: &Vector) -> Result<Vec<Vector>> {
        Ok(self.section_points(x)?.into_iter().map(|(_, p)| p).collect())
    }

    /// Prism `self × [low, high]` one dimension up.
    pub fn prism(&self, low: &Rat, high: &Rat) -> Result<Polytope> {
        if low >= high {
            return Err(Error::DegenerateInput("prism height must be positive".into()));
        }
        let n = self.vertices.len();
        let mut vertices: Vec<Vector> = self.vertices.iter().map(|v| v.extend(low.clone())).collect();
        vertices.extend(self.vertices.iter().map(|v| v.extend(high.clone())));
        let mut facets: Vec<Vec<usize>> = vec![(0..n).collect(), (n..2 * n).collect()];
        for f in &self.facets {
            let mut set = f.vertices.clone();
            set.extend(f.vertices.iter().map(|&v| v + n));
            facets.push(set);
        }
        build_polytope(&vertices, Some(&facets))
    }

    /// Axis-aligned box `[a_1, b_1] × … × [a_d, b_d]`, `d >= 2`.
    pub fn axis_box(bounds: &[(Rat, Rat)]) -> Result<Polytope> {
        if bounds.len() < 2 {
            return Err(Error::UnsupportedDimension(bounds.len()));
        }
        if bounds.iter().any(|(a, b)| a >= b) {
            return Err(Error::DegenerateInput("box bounds must satisfy a < b".into()));
        }
        let (a0, b0) = &bounds[0];
        let (a1, b1) = &bounds[1];
        let corners = [
            Vector::new(vec![a0.clone(), a1.clone()]),
            Vector::new(vec![b0.clone(), a1.clone()]),
            Vector::new(vec![b0.clone(), b1.clone()]),
            Vector::new(vec![a0.clone(), b1.clone()]),
        ];
        let mut p = build_polygon(&corners)?;
        for (a, b) in &bounds[2..] {
            p = p.prism(a, b)?;
        }
        Ok(p)
    }

    /// Bounds `(a_i, b_i)` if this polytope is an axis-aligned box.
    pub fn box_bounds(&self) -> Option<Vec<(Rat, Rat)>> {
        if self.vertices.len() != 1usize << self.dim {
            return None;
        }
        let bounds: Vec<(Rat, Rat)> = (0..self.dim)
            .map(|i| {
                let coords = self.vertices.iter().map(|v| v[i].clone());
                let lo = coords.clone().min().unwrap_or_else(Rat::zero);
                let hi = coords.max().unwrap_or_else(Rat::zero);
                (lo, hi)
            })
            .collect();
        let on_corner = |v: &Vector| (0..self.dim).all(|i| v[i] == bounds[i].0 || v[i] == bounds[i].1);
        // distinct vertices, 2^d of them, all on corners: exactly the corner set
        self.vertices.iter().all(on_corner).then_some(bounds)
    }
}

/// `conv(a, b) ∩ x⊥` given the heights `<a, x>` and `<b, x>` of opposite sign.
pub fn edge_crossing(a: &Vector, b: &Vector, ha: &Rat, hb: &Rat) -> Vector {
    let denom = hb - ha;
    &a.scale(&(hb / &denom)) - &b.scale(&(ha / &denom))
}

/// Orders section points: along `rot90(x)` in the plane, counterclockwise
/// around `x` in space.
fn order_section(points: &mut Vec<(SectionPoint, Vector)>, x: &Vector) {
    match x.dim() {
        2 => {
            let dir = x.rot90();
            points.sort_by_key(|(_, p)| p.dot(&dir));
            if points.len() > 2 {
                let last = points.len() - 1;
                points.swap(1, last);
                points.truncate(2);
            }
        }
        3 => order_cyclic(points, x),
        _ => points.sort_by_key(|a| a.0),
    }
}

/// Angular sort around the centroid inside the plane `x⊥`, oriented so that
/// `det[p1 - p0, p2 - p0, x] > 0`.
fn order_cyclic(points: &mut [(SectionPoint, Vector)], x: &Vector) {
    if points.len() < 3 {
        points.sort_by_key(|a| a.0);
        return;
    }
    // dropping a coordinate where x is nonzero maps x⊥ bijectively onto a plane
    let drop = (0..3)
        .max_by(|&i, &j| x[i].abs().cmp(&x[j].abs()))
        .unwrap_or(0);
    let project = |p: &Vector| p.drop_axis(drop);
    let count = int(points.len() as i64);
    let centroid = points
        .iter()
        .fold(Vector::zero(2), |acc, (_, p)| &acc + &project(p))
        .scale(&(int(1) / count));
    let upper = |v: &Vector| v[1].is_positive() || (v[1].is_zero() && v[0].is_positive());
    points.sort_by(|(ta, a), (tb, b)| {
        let u = &project(a) - &centroid;
        let w = &project(b) - &centroid;
        upper(&w)
            .cmp(&upper(&u))
            .then_with(|| Rat::zero().cmp(&det2(&u, &w)))
            .then_with(|| u.norm_squared().cmp(&w.norm_squared()))
            .then_with(|| ta.cmp(tb))
    });
    let p0 = points[0].1.clone();
    let orientation = points[1..]
        .windows(2)
        .map(|w| det3(&(&w[0].1 - &p0), &(&w[1].1 - &p0), x))
        .find(|d| !d.is_zero());
    if orientation.is_some_and(|d| d.is_negative()) {
        points[1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::vector;

    fn triangle() -> Polytope {
        build_polygon(&[vector![0, 1], vector![-1, -1], vector![1, -1]]).unwrap()
    }

    fn square() -> Polytope {
        build_polygon(&[vector![-1, -1], vector![1, -1], vector![1, 1], vector![-1, 1]]).unwrap()
    }

    fn cube(lo: i64, hi: i64) -> Polytope {
        Polytope::axis_box(&[(int(lo), int(hi)), (int(lo), int(hi)), (int(lo), int(hi))]).unwrap()
    }

    #[test]
    fn triangle_keeps_input_order() {
        let t = triangle();
        assert_eq!(t.vertices(), &[vector![0, 1], vector![-1, -1], vector![1, -1]]);
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn square_with_center_drops_center() {
        let p = build_polygon(&[vector![-1, -1], vector![1, -1], vector![1, 1], vector![-1, 1], vector![0, 0]]).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.edges().len(), 4);
        assert_eq!(p, square());
    }

    #[test]
    fn collinear_points_are_degenerate() {
        let err = build_polygon(&[vector![0, 0], vector![1, 1], vector![2, 2]]).unwrap_err();
        assert!(matches!(err, Error::DegenerateInput(_)));
    }

    #[test]
    fn cube_combinatorics() {
        let c = cube(-1, 1);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.edges().len(), 12);
        assert_eq!(c.facets().len(), 6);
        let c = cube(0, 2);
        assert_eq!(c.edges().len(), 12);
        assert!(c.vertices().iter().all(|v| v.coords().iter().all(|x| *x == int(0) || *x == int(2))));
    }

    #[test]
    fn cube_from_explicit_facets() {
        let mut verts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    verts.push(vector![x, y, z]);
                }
            }
        }
        let axis_facet = |axis: usize, value: i64| -> Vec<usize> {
            (0..8).filter(|&i| verts[i][axis] == int(value)).collect()
        };
        let facets: Vec<Vec<usize>> = (0..3).flat_map(|a| [axis_facet(a, -1), axis_facet(a, 1)]).collect();
        let c = build_polytope(&verts, Some(&facets)).unwrap();
        assert_eq!(c.edges().len(), 12);
        let hull = build_polytope(&verts, None).unwrap();
        assert_eq!(hull.edges().len(), 12);
    }

    #[test]
    fn non_coplanar_facet_rejected() {
        let verts = vec![vector![0, 0, 0], vector![1, 0, 0], vector![0, 1, 0], vector![0, 0, 1]];
        let facets = vec![vec![0, 1, 2, 3]];
        let err = build_polytope(&verts, Some(&facets)).unwrap_err();
        assert!(matches!(err, Error::InvalidCombinatorics(_)));
    }

    #[test]
    fn non_extreme_vertex_rejected() {
        // the apex of a flat pyramid lies inside the square's facet plane
        let verts = vec![
            vector![0, 0, 0],
            vector![2, 0, 0],
            vector![2, 2, 0],
            vector![0, 2, 0],
            vector![1, 1, 0],
            vector![1, 1, 1],
        ];
        let facets = vec![
            vec![0, 1, 2, 3, 4],
            vec![0, 1, 5],
            vec![1, 2, 5],
            vec![2, 3, 5],
            vec![0, 3, 5],
        ];
        let err = build_polytope(&verts, Some(&facets)).unwrap_err();
        assert!(matches!(err, Error::InvalidCombinatorics(_)));
    }

    #[test]
    fn translation() {
        let s = square().translate(&vector![1, 1]).unwrap();
        assert!(s.vertices().contains(&vector![0, 0]));
        assert!(s.vertices().contains(&vector![2, 2]));
        let t = triangle().translate(&vector![0, 2]).unwrap();
        assert_eq!(t.vertices(), &[vector![0, 3], vector![-1, 1], vector![1, 1]]);
        assert_eq!(triangle().translate(&vector![0, 0]).unwrap(), triangle());
        assert!(triangle().translate(&vector![0, 0, 0]).is_err());
    }

    #[test]
    fn origin_positions() {
        assert_eq!(square().origin_position(), OriginPosition::Interior);
        let corner = square().translate(&vector![1, 1]).unwrap();
        let origin = corner.vertices().iter().position(Vector::is_zero).unwrap();
        assert_eq!(corner.origin_position(), OriginPosition::LowerFace(vec![origin]));
        let side = square().translate(&vector![1, 0]).unwrap();
        match side.origin_position() {
            OriginPosition::FacetInterior(f) => {
                let facet = &side.facets()[f];
                assert!(facet.vertices.iter().all(|&v| side.vertex(v)[0] == int(0)));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(square().translate(&vector![3, 0]).unwrap().origin_position(), OriginPosition::Outside);
    }

    #[test]
    fn cross_sections() {
        assert_eq!(square().cross_section(&vector![1, 0]).unwrap(), vec![vector![0, -1], vector![0, 1]]);
        let mut pts = triangle().cross_section(&vector![2, 1]).unwrap();
        pts.sort();
        assert_eq!(pts, vec![Vector::new(vec![rat(-1, 4), rat(1, 2)]), Vector::new(vec![rat(1, 2), int(-1)])]);
        let mut facet = cube(0, 2).cross_section(&vector![0, 0, 1]).unwrap();
        facet.sort();
        assert_eq!(facet, vec![vector![0, 0, 0], vector![0, 2, 0], vector![2, 0, 0], vector![2, 2, 0]]);
        assert_eq!(square().translate(&vector![3, 0]).unwrap().cross_section(&vector![1, 0]), Err(Error::EmptySection));
        assert_eq!(square().cross_section(&vector![0, 0]), Err(Error::ZeroDirection));
    }

    #[test]
    fn hexagonal_section_is_cyclic() {
        let c = cube(-1, 1);
        let x = vector![1, 1, 1];
        let pts = c.cross_section(&x).unwrap();
        assert_eq!(pts.len(), 6);
        for i in 0..6 {
            let (a, b, n) = (&pts[i], &pts[(i + 1) % 6], &pts[(i + 2) % 6]);
            assert!(det3(&(b - a), &(n - a), &x).is_positive());
        }
    }

    #[test]
    fn box_detection() {
        let b = cube(0, 2);
        assert_eq!(b.box_bounds().unwrap(), vec![(int(0), int(2)); 3]);
        assert!(triangle().box_bounds().is_none());
        let rhombus = build_polygon(&[vector![1, 0], vector![0, 1], vector![-1, 0], vector![0, -1]]).unwrap();
        assert!(rhombus.box_bounds().is_none());
    }
}
