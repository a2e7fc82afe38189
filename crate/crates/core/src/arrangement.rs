//! The central arrangement of hyperplanes `v⊥`, one per non-zero vertex,
//! and its open chambers labelled by sign vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fourier_motzkin::strict_witness;
use crate::polytope::Polytope;
use crate::vector::{det2, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(value: &crate::Rat) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Plus)
        } else if value.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Side of each vertex hyperplane, keyed by vertex index. Vertices at the
/// origin have no hyperplane and no entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    signs: BTreeMap<usize, Sign>,
}

impl SignVector {
    pub fn new(signs: BTreeMap<usize, Sign>) -> Self {
        SignVector { signs }
    }

    /// Parses `"+-+"` against the given vertex indices.
    pub fn parse(s: &str, indices: &[usize]) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != indices.len() {
            return Err(Error::Parse(format!("sign vector {s:?} needs {} entries", indices.len())));
        }
        let signs = indices
            .iter()
            .zip(chars)
            .map(|(&i, c)| match c {
                '+' => Ok((i, Sign::Plus)),
                '-' => Ok((i, Sign::Minus)),
                _ => Err(Error::Parse(format!("bad sign {c:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(SignVector { signs })
    }

    pub fn get(&self, vertex: usize) -> Option<Sign> {
        self.signs.get(&vertex).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.signs.iter().map(|(&i, &s)| (i, s))
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            signs: self.signs.iter().map(|(&i, &s)| (i, s.flip())).collect(),
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs.values() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralHyperplane {
    pub vertex_index: usize,
    pub normal: Vector,
}

/// An open chamber: its sign vector, a rational interior direction, and
/// the edges of `P` whose endpoints it separates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub cocircuit: SignVector,
    pub witness: Vector,
    pub crossed_edges: Vec<(usize, usize)>,
}

pub fn central_arrangement(p: &Polytope) -> Vec<CentralHyperplane> {
    p.vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| CentralHyperplane {
            vertex_index: i,
            normal: v.clone(),
        })
        .collect()
}

/// Sign vector of the chamber containing `x`.
pub fn cocircuit_of(p: &Polytope, x: &Vector) -> Result<SignVector> {
    if x.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: x.dim(),
        });
    }
    let mut signs = BTreeMap::new();
    for h in central_arrangement(p) {
        let s = Sign::of(&h.normal.dot(x)).ok_or(Error::OnWall(h.vertex_index))?;
        signs.insert(h.vertex_index, s);
    }
    Ok(SignVector { signs })
}

/// Edges whose endpoints carry different signs. Edges at an origin vertex
/// are never crossed transversally.
pub fn crossed_edges(p: &Polytope, s: &SignVector) -> Vec<(usize, usize)> {
    let mut crossed: Vec<(usize, usize)> = p
        .edges()
        .iter()
        .filter_map(|&(a, b)| match (s.get(a), s.get(b)) {
            (Some(sa), Some(sb)) if sa != sb => Some((a.min(b), a.max(b))),
            _ => None,
        })
        .collect();
    crossed.sort_unstable();
    crossed
}

fn chamber_at(p: &Polytope, witness: Vector) -> Result<Chamber> {
    let cocircuit = cocircuit_of(p, &witness)?;
    let crossed_edges = crossed_edges(p, &cocircuit);
    Ok(Chamber {
        cocircuit,
        witness,
        crossed_edges,
    })
}

/// All open chambers of the central arrangement. Planar chambers come in
/// counterclockwise order of their witnesses starting from angle 0; in
/// higher dimensions they are sorted by sign vector.
pub fn enumerate_chambers(p: &Polytope) -> Result<Vec<Chamber>> {
    if p.dim() == 2 {
        let rays = wall_rays(p);
        let m = rays.len();
        let mut chambers = (0..m)
            .map(|i| chamber_at(p, (&rays[i] + &rays[(i + 1) % m]).primitive()))
            .collect::<Result<Vec<_>>>()?;
        chambers.sort_by(|a, b| angle_cmp(&a.witness, &b.witness));
        return Ok(chambers);
    }
    let hyperplanes = central_arrangement(p);
    let mut found = Vec::new();
    let mut prefix = Vec::new();
    extend_sign_prefix(&hyperplanes, &mut prefix, &mut found);
    let mut chambers = found
        .into_iter()
        .map(|w| chamber_at(p, w))
        .collect::<Result<Vec<_>>>()?;
    chambers.sort_by(|a, b| a.cocircuit.cmp(&b.cocircuit));
    Ok(chambers)
}

/// Depth-first search over sign assignments, pruning infeasible prefixes.
fn extend_sign_prefix(hyperplanes: &[CentralHyperplane], prefix: &mut Vec<Vector>, out: &mut Vec<Vector>) {
    let k = prefix.len();
    if k == hyperplanes.len() {
        if let Some(w) = strict_witness(prefix) {
            out.push(w);
        }
        return;
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let normal = match sign {
            Sign::Plus => hyperplanes[k].normal.clone(),
            Sign::Minus => -&hyperplanes[k].normal,
        };
        prefix.push(normal);
        if strict_witness(prefix).is_some() {
            extend_sign_prefix(hyperplanes, prefix, out);
        }
        prefix.pop();
    }
}

/// The distinct rays of the planar wall lines, sorted by angle.
fn wall_rays(p: &Polytope) -> Vec<Vector> {
    let mut rays: Vec<Vector> = central_arrangement(p)
        .iter()
        .flat_map(|h| {
            let r = h.normal.rot90().primitive();
            [-&r, r]
        })
        .collect();
    rays.sort_by(angle_cmp);
    rays.dedup();
    rays
}

/// Compares planar directions by angle in `[0, 2π)`.
pub fn angle_cmp(a: &Vector, b: &Vector) -> Ordering {
    let half = |v: &Vector| !(v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()));
    half(a)
        .cmp(&half(b))
        .then_with(|| crate::Rat::zero().cmp(&det2(a, b)))
}

/// Clockwise and counterclockwise boundary rays of a planar chamber.
pub fn sector_walls(p: &Polytope, chamber: &Chamber) -> Result<(Vector, Vector)> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let rays = wall_rays(p);
    let w = &chamber.witness;
    let next = rays
        .iter()
        .position(|r| angle_cmp(r, w) == Ordering::Greater)
        .unwrap_or(0);
    let prev = (next + rays.len() - 1) % rays.len();
    Ok((rays[prev].clone(), rays[next].clone()))
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

    fn labels(chambers: &[Chamber]) -> Vec<String> {
        chambers.iter().map(|c| c.cocircuit.to_string()).collect()
    }

    #[test]
    fn hyperplanes_skip_origin_vertex() {
        assert_eq!(central_arrangement(&triangle()).len(), 3);
        let corner = square().translate(&vector![1, 1]).unwrap();
        assert_eq!(central_arrangement(&corner).len(), 3);
        assert_eq!(central_arrangement(&square()).len(), 4);
    }

    #[test]
    fn triangle_chambers_match_figure() {
        let chambers = enumerate_chambers(&triangle()).unwrap();
        assert_eq!(labels(&chambers), ["+-+", "+--", "++-", "-+-", "-++", "--+"]);
        let shifted = triangle().translate(&vector![0, 2]).unwrap();
        let got = labels(&enumerate_chambers(&shifted).unwrap());
        assert_eq!(got.len(), 6);
        assert!(got.contains(&"+++".to_string()) && got.contains(&"---".to_string()));
    }

    #[test]
    fn square_has_four_chambers() {
        // two distinct wall lines: x1 = x2 and x1 = -x2
        assert_eq!(enumerate_chambers(&square()).unwrap().len(), 4);
    }

    #[test]
    fn cocircuits() {
        let t = triangle();
        assert_eq!(cocircuit_of(&t, &vector![0, 1]).unwrap().to_string(), "+--");
        assert_eq!(cocircuit_of(&t, &vector![0, -1]).unwrap().to_string(), "-++");
        assert_eq!(cocircuit_of(&t, &vector![1, 0]), Err(Error::OnWall(0)));
    }

    #[test]
    fn crossed_edges_by_sign_scan() {
        let t = triangle();
        let s = cocircuit_of(&t, &Vector::new(vec![crate::rational::rat(1, 10), crate::rational::int(1)])).unwrap();
        assert_eq!(crossed_edges(&t, &s), vec![(0, 1), (0, 2)]);
        let sq = square();
        let s = cocircuit_of(&sq, &vector![3, 1]).unwrap();
        let crossed = crossed_edges(&sq, &s);
        assert_eq!(crossed.len(), 2);
        for (a, b) in crossed {
            assert_eq!(sq.vertex(a)[1], sq.vertex(b)[1], "horizontal edge expected");
        }
    }

    #[test]
    fn cube_chambers_close_under_negation() {
        let cube = Polytope::axis_box(&vec![(crate::rational::int(-1), crate::rational::int(1)); 3]).unwrap();
        let chambers = enumerate_chambers(&cube).unwrap();
        // four planes x·(±1,±1,1) = 0 in general position: 4·3 + 2 chambers
        assert_eq!(chambers.len(), 14);
        for c in &chambers {
            assert_eq!(cocircuit_of(&cube, &c.witness).unwrap(), c.cocircuit);
            assert!(chambers.iter().any(|d| d.cocircuit == c.cocircuit.negated()));
        }
    }

    #[test]
    fn walls_bracket_the_witness() {
        let t = triangle();
        for c in enumerate_chambers(&t).unwrap() {
            let (cw, ccw) = sector_walls(&t, &c).unwrap();
            assert!(det2(&cw, &c.witness).is_positive());
            assert!(det2(&c.witness, &ccw).is_positive());
        }
    }
}
