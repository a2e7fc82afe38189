//! Deciding and certifying convexity of `IP`.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::arrangement::{enumerate_chambers, sector_walls, Chamber, SignVector};
use crate::error::{Error, Result};
use crate::polytope::{edge_crossing, OriginPosition, Polytope};
use crate::probe::{midpoint_convexity_probe, ProbeResult};
use crate::radial::{chamber_radial_piece, radial_value};
use crate::rational::{fmt_rat, int, rat, Rat};
use crate::vector::{det2, Vector};

/// Number of probe pairs used when no exact criterion applies.
pub const DEFAULT_PROBE_PAIRS: usize = 1000;

/// `(alpha - beta)^2 / (2 (2 + alpha + beta) (alpha + beta))`.
pub fn gap_multiplier(alpha: &Rat, beta: &Rat) -> Rat {
    let diff = alpha - beta;
    let sum = alpha + beta;
    &diff * &diff / (int(2) * (int(2) + &sum) * sum)
}

/// `(a_2, -a_1)`.
fn rot(a: &Vector) -> Vector {
    a.rot_neg90()
}

/// The planar configuration behind a non-convexity witness: chords
/// `[a, -alpha a]` and `[b, -beta b]` through the origin, their boundary
/// points `p_a`, `p_b` of `IP`, the boundary point `p_ab` in the middle
/// direction, and the point `q` of the chord `[p_a, p_b]` in that direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessGeometry {
    pub a: Vector,
    pub b: Vector,
    #[serde(serialize_with = "ser_rat")]
    pub alpha: Rat,
    #[serde(serialize_with = "ser_rat")]
    pub beta: Rat,
    pub p_a: Vector,
    pub p_b: Vector,
    pub p_ab: Vector,
    pub q: Vector,
    /// `(|q| - |p_ab|) / |a + b|`.
    #[serde(serialize_with = "ser_rat")]
    pub gap: Rat,
}

fn ser_rat<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(r))
}

impl WitnessGeometry {
    pub fn from_parameters(a: Vector, b: Vector, alpha: Rat, beta: Rat) -> Result<Self> {
        if a.dim() != 2 || b.dim() != 2 {
            return Err(Error::UnsupportedDimension(a.dim().max(b.dim())));
        }
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(Error::DegenerateInput("alpha and beta must be positive".into()));
        }
        if alpha == beta {
            return Err(Error::ParallelEdges);
        }
        if det2(&a, &b).is_zero() {
            return Err(Error::DegenerateInput("a and b must be independent".into()));
        }
        let one = Rat::one();
        let s = &a + &b;
        let p_a = rot(&a).scale(&(&one + &alpha));
        let p_b = rot(&b).scale(&(&one + &beta));
        let q = rot(&s).scale(&((&one + &alpha) * (&one + &beta) / (int(2) + &alpha + &beta)));
        let p_ab = rot(&s).scale(&(rat(1, 2) + &alpha * &beta / (&alpha + &beta)));
        let gap = gap_multiplier(&alpha, &beta);
        Ok(WitnessGeometry {
            a,
            b,
            alpha,
            beta,
            p_a,
            p_b,
            p_ab,
            q,
            gap,
        })
    }

    /// `|q|^2 > |p_ab|^2`, exactly.
    pub fn gap_is_positive(&self) -> bool {
        self.q.norm_squared() > self.p_ab.norm_squared()
    }
}

/// A certificate that `IP` is not convex inside one chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub chamber: Chamber,
    #[serde(flatten)]
    pub geometry: WitnessGeometry,
}

impl Witness {
    /// Rechecks the certificate against `P`: `p_a`, `p_b`, `p_ab` lie on
    /// the boundary of `IP`, `q` lies on the chord `[p_a, p_b]` in the
    /// direction of `p_ab`, and `q` is strictly farther out.
    pub fn verify(&self, p: &Polytope) -> Result<bool> {
        let g = &self.geometry;
        let one = Rat::one();
        for point in [&g.p_a, &g.p_b, &g.p_ab] {
            if radial_value(p, point)? != one {
                return Ok(false);
            }
        }
        let on_chord = det2(&(&g.q - &g.p_a), &(&g.p_b - &g.p_a)).is_zero();
        let same_ray = det2(&g.q, &g.p_ab).is_zero() && g.q.dot(&g.p_ab).is_positive();
        Ok(on_chord && same_ray && g.gap_is_positive() && radial_value(p, &g.q)? < one)
    }
}

/// One step of a slice chain: the box is cut by `x_axis = 0`, which by the
/// prism identity scales the lower-dimensional intersection body by `factor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceStep {
    pub axis: usize,
    #[serde(serialize_with = "ser_rat")]
    pub factor: Rat,
}

/// Reduction of a non-symmetric box to a non-convex planar face.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SliceChain {
    /// A coordinate with `a_i != -b_i`.
    pub coordinate: usize,
    pub steps: Vec<SliceStep>,
    /// Original coordinates spanning the planar base box.
    pub base_axes: (usize, usize),
    #[serde(serialize_with = "ser_bounds")]
    pub base_bounds: Vec<(Rat, Rat)>,
    #[serde(serialize_with = "ser_report")]
    pub base: Box<ConvexityReport>,
}

fn ser_bounds<S: Serializer>(b: &[(Rat, Rat)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<[String; 2]> = b.iter().map(|(lo, hi)| [fmt_rat(lo), fmt_rat(hi)]).collect();
    v.serialize(s)
}

fn ser_report<S: Serializer>(r: &ConvexityReport, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.to_json().serialize(s)
}

impl SliceChain {
    /// Checks every prism step on `samples` random directions and that the
    /// planar base is certified non-convex.
    pub fn verify(&self, bounds: &[(Rat, Rat)], samples: usize, seed: u64) -> Result<bool> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut axes: Vec<usize> = (0..bounds.len()).collect();
        for step in &self.steps {
            let pos = axes
                .iter()
                .position(|&a| a == step.axis)
                .ok_or_else(|| Error::Internal("slice axis already removed".into()))?;
            let current: Vec<(Rat, Rat)> = axes.iter().map(|&a| bounds[a].clone()).collect();
            let (lo, hi) = &bounds[step.axis];
            if (hi - lo) != step.factor {
                return Ok(false);
            }
            axes.remove(pos);
            let reduced: Vec<(Rat, Rat)> = axes.iter().map(|&a| bounds[a].clone()).collect();
            let big = Polytope::axis_box(&current)?;
            let small = Polytope::axis_box(&reduced)?;
            for _ in 0..samples {
                let u = random_direction(&mut rng, reduced.len());
                let mut coords = u.coords().to_vec();
                coords.insert(pos, Rat::zero());
                let lifted = Vector::new(coords);
                if radial_value(&big, &lifted)? != &step.factor * radial_value(&small, &u)? {
                    return Ok(false);
                }
            }
        }
        let expected = [self.base_axes.0, self.base_axes.1];
        if axes != expected {
            return Ok(false);
        }
        let base_box = Polytope::axis_box(&self.base_bounds)?;
        match &self.base.verdict {
            Verdict::NonConvex(NonConvexReason::Witness(w)) => w.verify(&base_box),
            Verdict::NonConvex(_) => Ok(true),
            _ => Ok(false),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NonConvexReason {
    Witness(Box<Witness>),
    /// The origin is in the relative interior of this facet.
    DiscontinuityAtFacet(usize),
    OriginOutsideOrLowFace(OriginPosition),
    SliceChain(Box<SliceChain>),
    ProbeViolation { x: Vector, y: Vector, margin: Rat },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Convex,
    NonConvex(NonConvexReason),
    /// No exact criterion applies and sampling found no violation.
    Inconclusive,
}

impl Verdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, Verdict::Convex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Convex => "convex",
            Verdict::NonConvex(_) => "non_convex",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Classification of one chamber's boundary piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberClass {
    pub cocircuit: SignVector,
    pub witness: Vector,
    pub crossed_edges: Vec<(usize, usize)>,
    pub piece_degree: u32,
    pub parallel_edges: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityReport {
    pub verdict: Verdict,
    pub per_chamber: Option<Vec<ChamberClass>>,
    pub symmetric: bool,
}

impl ConvexityReport {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "verdict": self.verdict.name(),
            "symmetric": self.symmetric,
        });
        if let Verdict::NonConvex(reason) = &self.verdict {
            let (name, detail) = match reason {
                NonConvexReason::Witness(w) => ("witness", json!(w)),
                NonConvexReason::DiscontinuityAtFacet(f) => ("discontinuity_at_facet", json!(f)),
                NonConvexReason::OriginOutsideOrLowFace(pos) => ("origin_outside_or_low_face", json!(pos)),
                NonConvexReason::SliceChain(c) => ("slice_chain", json!(c)),
                NonConvexReason::ProbeViolation { x, y, margin } => (
                    "probe_violation",
                    json!({"x": x, "y": y, "margin": fmt_rat(margin)}),
                ),
            };
            out["reason"] = json!(name);
            out[name] = detail;
        }
        if let Some(pc) = &self.per_chamber {
            out["per_chamber"] = json!(pc);
        }
        out
    }
}

impl Serialize for ConvexityReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Whether the vertex set is invariant under `v -> -v`.
pub fn is_origin_symmetric(p: &Polytope) -> bool {
    let verts = p.vertices();
    verts.iter().all(|v| verts.contains(&-v))
}

fn require_planar(p: &Polytope) -> Result<()> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    Ok(())
}

fn edges_parallel(p: &Polytope, e: (usize, usize), f: (usize, usize)) -> bool {
    let u = p.vertex(e.1) - p.vertex(e.0);
    let w = p.vertex(f.1) - p.vertex(f.0);
    det2(&u, &w).is_zero()
}

fn origin_verdict(p: &Polytope) -> Option<Verdict> {
    match p.origin_position() {
        OriginPosition::Interior => None,
        OriginPosition::FacetInterior(f) => Some(Verdict::NonConvex(NonConvexReason::DiscontinuityAtFacet(f))),
        pos => Some(Verdict::NonConvex(NonConvexReason::OriginOutsideOrLowFace(pos))),
    }
}

/// Exact planar decision: `IP` is convex iff the origin is interior and
/// `P = -P`. Non-symmetric polygons get a witness chamber.
pub fn convexity_report_2d(p: &Polytope) -> Result<ConvexityReport> {
    require_planar(p)?;
    let symmetric = is_origin_symmetric(p);
    if let Some(verdict) = origin_verdict(p) {
        return Ok(ConvexityReport {
            verdict,
            per_chamber: None,
            symmetric,
        });
    }
    let chambers = enumerate_chambers(p)?;
    let mut per_chamber = Vec::with_capacity(chambers.len());
    for c in &chambers {
        let piece = chamber_radial_piece(p, c)?;
        let parallel = match c.crossed_edges.as_slice() {
            [e, f] => edges_parallel(p, *e, *f),
            _ => false,
        };
        per_chamber.push(ChamberClass {
            cocircuit: c.cocircuit.clone(),
            witness: c.witness.clone(),
            crossed_edges: c.crossed_edges.clone(),
            piece_degree: piece.degree(),
            parallel_edges: parallel,
        });
    }
    let verdict = if symmetric {
        Verdict::Convex
    } else {
        let chamber = chambers
            .iter()
            .zip(&per_chamber)
            .find(|(_, class)| !class.parallel_edges)
            .map(|(c, _)| c)
            .ok_or_else(|| Error::Internal("asymmetric polygon without a non-parallel chamber".into()))?;
        let witness = nonconvexity_witness(p, chamber)?;
        Verdict::NonConvex(NonConvexReason::Witness(Box::new(witness)))
    };
    Ok(ConvexityReport {
        verdict,
        per_chamber: Some(per_chamber),
        symmetric,
    })
}

/// Crossing points of the two crossed edges at `u`, ordered so that the
/// first one, `a`, satisfies `<(a_2, -a_1), u> > 0`.
fn oriented_crossings(p: &Polytope, edges: [(usize, usize); 2], u: &Vector) -> (Vector, Vector, usize) {
    let cross = |(i, j): (usize, usize)| {
        let (a, b) = (p.vertex(i), p.vertex(j));
        edge_crossing(a, b, &a.dot(u), &b.dot(u))
    };
    let c0 = cross(edges[0]);
    let c1 = cross(edges[1]);
    if rot(&c0).dot(u).is_positive() {
        (c0, c1, 0)
    } else {
        (c1, c0, 1)
    }
}

/// Builds the non-convexity certificate in a chamber whose two crossed
/// edges are not parallel. `u_a` is the chamber witness and `u_b` the sum
/// of the witness and the counterclockwise wall ray, both strictly inside.
pub fn nonconvexity_witness(p: &Polytope, chamber: &Chamber) -> Result<Witness> {
    require_planar(p)?;
    let pos = p.origin_position();
    if pos != OriginPosition::Interior {
        return Err(Error::OriginNotInterior(pos));
    }
    let edges: [(usize, usize); 2] = chamber
        .crossed_edges
        .as_slice()
        .try_into()
        .map_err(|_| Error::InvalidCombinatorics("chamber must cross exactly two edges".into()))?;
    if edges_parallel(p, edges[0], edges[1]) {
        return Err(Error::ParallelEdges);
    }
    let u_a = chamber.witness.clone();
    let (_, ccw) = sector_walls(p, chamber)?;
    let u_b = (&u_a + &ccw).primitive();
    let (a, a2, first) = oriented_crossings(p, edges, &u_a);
    let (b, b2, first_b) = oriented_crossings(p, edges, &u_b);
    if first != first_b {
        return Err(Error::Internal("edge roles changed inside a chamber".into()));
    }
    let alpha = -a2.dot(&a) / a.norm_squared();
    let beta = -b2.dot(&b) / b.norm_squared();
    if a.scale(&-alpha.clone()) != a2 || b.scale(&-beta.clone()) != b2 {
        return Err(Error::Internal("section is not a chord through the origin".into()));
    }
    let geometry = WitnessGeometry::from_parameters(a, b, alpha, beta)?;
    Ok(Witness {
        chamber: chamber.clone(),
        geometry,
    })
}

/// Checks that every boundary piece of `IP` is the matching edge of
/// `2 r_{pi/2} P`: the piece is linear, vanishes at both rotated doubled
/// endpoints of a crossed edge, and the boundary points of `IP` on the two
/// chamber walls are exactly those endpoints.
pub fn gardner_check(p: &Polytope) -> Result<bool> {
    require_planar(p)?;
    if !is_origin_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    for c in enumerate_chambers(p)? {
        let piece = chamber_radial_piece(p, &c)?;
        if piece.degree() != 1 {
            return Ok(false);
        }
        let (cw, ccw) = sector_walls(p, &c)?;
        let inside = |y: &Vector| !det2(&cw, y).is_negative() && !det2(y, &ccw).is_negative();
        let candidates: Vec<(Vector, Vector)> = c
            .crossed_edges
            .iter()
            .map(|&(i, j)| {
                (
                    p.vertex(i).rot90().scale(&int(2)),
                    p.vertex(j).rot90().scale(&int(2)),
                )
            })
            .filter(|(e0, e1)| inside(e0) && inside(e1))
            .collect();
        let Some((e0, e1)) = candidates.first() else {
            return Ok(false);
        };
        if !piece.boundary.eval_at(e0).is_zero() || !piece.boundary.eval_at(e1).is_zero() {
            return Ok(false);
        }
        let mut ends = Vec::new();
        for wall in [&cw, &ccw] {
            ends.push(wall.scale(&radial_value(p, wall)?));
        }
        let matches = (ends[0] == *e0 && ends[1] == *e1) || (ends[0] == *e1 && ends[1] == *e0);
        if !matches {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-zero integer direction with coordinates in `[-1000, 1000]`.
pub fn random_direction<R: Rng>(rng: &mut R, d: usize) -> Vector {
    loop {
        let coords: Vec<i64> = (0..d).map(|_| rng.gen_range(-1000..=1000)).collect();
        if coords.iter().any(|&c| c != 0) {
            return Vector::from_ints(&coords);
        }
    }
}

/// Checks `rho_{IK}((u, 0)) = (b - a) rho_{IL}(u)` for `K = L × [a, b]` on
/// `samples` random directions.
pub fn prism_slice_check(l: &Polytope, a: &Rat, b: &Rat, samples: usize, seed: u64) -> Result<bool> {
    let k = l.prism(a, b)?;
    let height = b - a;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = random_direction(&mut rng, l.dim());
        let lifted = u.extend(Rat::zero());
        if radial_value(&k, &lifted)? != &height * radial_value(l, &u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact decision for axis-aligned boxes: convex iff `a_i = -b_i` for all
/// `i`, otherwise certified by a slice chain down to a planar face.
pub fn parallelepiped_report(p: &Polytope) -> Result<ConvexityReport> {
    let bounds = p.box_bounds().ok_or(Error::NotABox)?;
    let Some(i) = (0..bounds.len()).find(|&i| bounds[i].0 != -bounds[i].1.clone()) else {
        return Ok(ConvexityReport {
            verdict: Verdict::Convex,
            per_chamber: None,
            symmetric: true,
        });
    };
    let j = if i == 0 { 1 } else { 0 };
    let steps: Vec<SliceStep> = (0..bounds.len())
        .rev()
        .filter(|&k| k != i && k != j)
        .map(|k| SliceStep {
            axis: k,
            factor: &bounds[k].1 - &bounds[k].0,
        })
        .collect();
    let base_axes = (i.min(j), i.max(j));
    let base_bounds = vec![bounds[base_axes.0].clone(), bounds[base_axes.1].clone()];
    let base = convexity_report_2d(&Polytope::axis_box(&base_bounds)?)?;
    let chain = SliceChain {
        coordinate: i,
        steps,
        base_axes,
        base_bounds,
        base: Box::new(base),
    };
    Ok(ConvexityReport {
        verdict: Verdict::NonConvex(NonConvexReason::SliceChain(Box::new(chain))),
        per_chamber: None,
        symmetric: false,
    })
}

/// Edges whose midpoint, taken as the origin, makes `P ∪ -P` convex: the two
/// interior angles at the edge sum to at most `pi`.
pub fn admissible_edge_positions(p: &Polytope) -> Result<Vec<(usize, Vector)>> {
    require_planar(p)?;
    let n = p.vertices().len();
    let v = |k: usize| p.vertex(k % n);
    let mut out = Vec::new();
    for i in 0..n {
        // directions of the previous and the next edge along the boundary
        let before = v(i + n) - v(i + n - 1);
        let after = v(i + 2) - v(i + 1);
        let c = det2(&before, &after);
        if c.is_negative() || (c.is_zero() && before.dot(&after).is_negative()) {
            let mid = (v(i) + v(i + 1)).scale(&rat(1, 2));
            out.push((i, mid));
        }
    }
    Ok(out)
}

/// Picks the exact criterion that applies to `P`, falling back to the
/// sampling probe.
pub fn convexity_report(p: &Polytope, seed: u64) -> Result<ConvexityReport> {
    if p.dim() == 2 {
        return convexity_report_2d(p);
    }
    if p.box_bounds().is_some() {
        return parallelepiped_report(p);
    }
    let symmetric = is_origin_symmetric(p);
    if let Some(verdict) = origin_verdict(p) {
        return Ok(ConvexityReport {
            verdict,
            per_chamber: None,
            symmetric,
        });
    }
    let probe: ProbeResult = midpoint_convexity_probe(p, DEFAULT_PROBE_PAIRS, seed)?;
    let verdict = match probe.violator {
        Some((x, y, margin)) => Verdict::NonConvex(NonConvexReason::ProbeViolation { x, y, margin }),
        // centrally symmetric bodies have convex intersection bodies
        None if symmetric => Verdict::Convex,
        None => Verdict::Inconclusive,
    };
    Ok(ConvexityReport {
        verdict,
        per_chamber: None,
        symmetric,
    })
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

    fn hexagon() -> Polytope {
        build_polygon(&[
            vector![2, 0],
            vector![1, 2],
            vector![-1, 2],
            vector![-2, 0],
            vector![-1, -2],
            vector![1, -2],
        ])
        .unwrap()
    }

    #[test]
    fn gap_spot_value() {
        assert_eq!(gap_multiplier(&int(1), &int(2)), rat(1, 30));
        assert!(gap_multiplier(&int(3), &int(3)).is_zero());
    }

    #[test]
    fn symmetry() {
        assert!(is_origin_symmetric(&square()));
        assert!(!is_origin_symmetric(&triangle()));
        assert!(is_origin_symmetric(&hexagon()));
    }

    #[test]
    fn planar_reports() {
        assert!(convexity_report_2d(&square()).unwrap().verdict.is_convex());
        let report = convexity_report_2d(&triangle()).unwrap();
        let Verdict::NonConvex(NonConvexReason::Witness(w)) = &report.verdict else {
            panic!("expected a witness, got {:?}", report.verdict)
        };
        assert!(w.verify(&triangle()).unwrap());
        let strip = build_polygon(&[vector![0, -1], vector![2, -1], vector![2, 1], vector![0, 1]]).unwrap();
        assert!(matches!(
            convexity_report_2d(&strip).unwrap().verdict,
            Verdict::NonConvex(NonConvexReason::DiscontinuityAtFacet(_))
        ));
    }

    #[test]
    fn witness_in_top_chamber() {
        let t = triangle();
        let s = crate::arrangement::cocircuit_of(&t, &vector![0, 1]).unwrap();
        let c = enumerate_chambers(&t).unwrap().into_iter().find(|c| c.cocircuit == s).unwrap();
        let w = nonconvexity_witness(&t, &c).unwrap();
        assert!(w.verify(&t).unwrap());
        assert_ne!(w.geometry.alpha, w.geometry.beta);
    }

    #[test]
    fn gardner() {
        assert!(gardner_check(&square()).unwrap());
        assert!(gardner_check(&hexagon()).unwrap());
        assert_eq!(gardner_check(&triangle()), Err(Error::NotSymmetric));
    }

    #[test]
    fn prism_identity() {
        let l = Polytope::axis_box(&[(int(0), int(2)), (int(0), int(2))]).unwrap();
        assert!(prism_slice_check(&l, &int(0), &int(2), 20, 1).unwrap());
        assert!(prism_slice_check(&triangle(), &int(-1), &int(1), 20, 2).unwrap());
        let k = triangle().prism(&int(-1), &int(1)).unwrap();
        assert_eq!(radial_value(&k, &vector![2, 1, 0]).unwrap(), rat(3, 2));
    }

    #[test]
    fn boxes() {
        let sym = Polytope::axis_box(&vec![(int(-1), int(1)); 3]).unwrap();
        assert!(parallelepiped_report(&sym).unwrap().verdict.is_convex());
        let bounds = vec![(int(0), int(2)); 3];
        let report = parallelepiped_report(&Polytope::axis_box(&bounds).unwrap()).unwrap();
        let Verdict::NonConvex(NonConvexReason::SliceChain(chain)) = &report.verdict else {
            panic!()
        };
        assert!(chain.verify(&bounds, 5, 3).unwrap());
        assert_eq!(parallelepiped_report(&triangle()), Err(Error::NotABox));
    }

    #[test]
    fn admissible_positions() {
        let para = build_polygon(&[vector![0, 0], vector![2, 0], vector![3, 1], vector![1, 1]]).unwrap();
        assert_eq!(admissible_edge_positions(&para).unwrap().len(), 4);
        assert_eq!(admissible_edge_positions(&triangle()).unwrap().len(), 3);
        assert_eq!(admissible_edge_positions(&hexagon()).unwrap().len(), 0);
        // trapezoid: the long top edge and both legs, not the short base
        let trap = build_polygon(&[vector![-1, 0], vector![1, 0], vector![2, 1], vector![-2, 1]]).unwrap();
        let got = admissible_edge_positions(&trap).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().any(|(_, m)| *m == vector![0, 1]));
        assert!(!got.iter().any(|(_, m)| *m == vector![0, 0]));
    }
}
