//! Convexity verdicts of `I(P + t)` over a grid of translations.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::arrangement::enumerate_chambers;
use crate::convexity::convexity_report_2d;
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::{fmt_decimal, int, parse_rat, rat, Rat};
use crate::translation::{affine_arrangement, region_of, AffineHyperplane, Region};
use crate::vector::Vector;

/// `min:max:steps`, with `steps` the number of nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridAxis {
    pub min: Rat,
    pub max: Rat,
    pub steps: usize,
}

impl GridAxis {
    pub fn parse(s: &str) -> Result<GridAxis> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, steps] = parts.as_slice() else {
            return Err(Error::Parse(format!("grid axis must be min:max:steps, got {s:?}")));
        };
        let steps: usize = steps
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad step count {steps:?}")))?;
        if steps == 0 {
            return Err(Error::Parse("grid axis needs at least one node".into()));
        }
        let (min, max) = (parse_rat(min)?, parse_rat(max)?);
        if min > max {
            return Err(Error::Parse(format!("grid axis {s:?} has min > max")));
        }
        Ok(GridAxis { min, max, steps })
    }

    pub fn node(&self, k: usize) -> Rat {
        if self.steps == 1 {
            return self.min.clone();
        }
        &self.min + (&self.max - &self.min) * rat(k as i64, self.steps as i64 - 1)
    }
}

/// Parses `"xmin:xmax:steps,ymin:ymax:steps"`.
pub fn parse_grid(s: &str) -> Result<(GridAxis, GridAxis)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty grid specification".into()));
    }
    let axes: Vec<&str> = s.split(',').collect();
    let [x, y] = axes.as_slice() else {
        return Err(Error::Parse(format!("grid needs two comma-separated axes, got {s:?}")));
    };
    Ok((GridAxis::parse(x)?, GridAxis::parse(y)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub i: usize,
    pub j: usize,
    pub t: Vector,
    pub region_id: usize,
    /// Region of the nudged node when `t` itself lies on `L(P)`.
    pub region: Region,
    pub nudged: bool,
    pub verdict: &'static str,
    pub chambers: usize,
}

/// Moves `t` off every hyperplane of the arrangement by a small fixed
/// rational offset, halving it until it lands in an open region.
fn nudge(arr: &[AffineHyperplane], t: &Vector) -> Result<(Region, bool)> {
    if let Ok(r) = region_of(arr, t) {
        return Ok((r, false));
    }
    let dir = Vector::new(vec![int(3), int(1)]);
    let mut eps = rat(1, 1000);
    for _ in 0..64 {
        let moved = t + &dir.scale(&eps);
        if let Ok(r) = region_of(arr, &moved) {
            return Ok((r, true));
        }
        eps /= int(2);
    }
    Err(Error::Internal(format!("could not nudge {t} off the arrangement")))
}

/// One row per grid node in row-major order (`i` over x, then `j` over y).
/// The verdict and chamber count are those of the exact node; region ids
/// number distinct regions in order of first appearance.
pub fn sweep(p: &Polytope, xs: &GridAxis, ys: &GridAxis) -> Result<Vec<SweepRow>> {
    if p.dim() != 2 {
        return Err(Error::UnsupportedDimension(p.dim()));
    }
    let arr = affine_arrangement(p);
    let nodes: Vec<(usize, usize)> = (0..xs.steps).flat_map(|i| (0..ys.steps).map(move |j| (i, j))).collect();
    let computed = nodes
        .par_iter()
        .map(|&(i, j)| {
            let t = Vector::new(vec![xs.node(i), ys.node(j)]);
            let (region, nudged) = nudge(&arr, &t)?;
            let moved = p.translate(&t)?;
            let verdict = convexity_report_2d(&moved)?.verdict.name();
            let chambers = enumerate_chambers(&moved)?.len();
            Ok((i, j, t, region, nudged, verdict, chambers))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut ids: HashMap<String, usize> = HashMap::new();
    Ok(computed
        .into_iter()
        .map(|(i, j, t, region, nudged, verdict, chambers)| {
            let next = ids.len();
            let region_id = *ids.entry(region.label()).or_insert(next);
            SweepRow {
                i,
                j,
                t,
                region_id,
                region,
                nudged,
                verdict,
                chambers,
            }
        })
        .collect())
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("i,j,t1,t2,region_id,region,verdict,chambers\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.i,
            r.j,
            fmt_decimal(&r.t[0]),
            fmt_decimal(&r.t[1]),
            r.region_id,
            r.region.label(),
            r.verdict,
            r.chambers
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn grid_parsing() {
        let (x, y) = parse_grid("-1.5:1.5:5,0:1:2").unwrap();
        assert_eq!(x.node(1), rat(-3, 4));
        assert_eq!(y.node(1), int(1));
        assert!(parse_grid("").is_err());
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0,0:1:2").is_err());
    }

    #[test]
    fn square_only_centre_convex() {
        let (x, y) = parse_grid("-1.5:1.5:5,-1.5:1.5:5").unwrap();
        let rows = sweep(&catalog::square(), &x, &y).unwrap();
        assert_eq!(rows.len(), 25);
        let convex: Vec<_> = rows.iter().filter(|r| r.verdict == "convex").collect();
        assert_eq!(convex.len(), 1);
        assert_eq!((convex[0].i, convex[0].j), (2, 2));
    }

    #[test]
    fn triangle_regions_differ() {
        let (x, y) = parse_grid("0:0:1,-2:2:3").unwrap();
        let rows = sweep(&catalog::triangle(), &x, &y).unwrap();
        assert_ne!(rows[0].region_id, rows[2].region_id);
    }
}
