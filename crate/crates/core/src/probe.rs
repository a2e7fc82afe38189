//! Sampling test of the midpoint inequality `rho(x + y) >= rho(x) rho(y) / (rho(x) + rho(y))`,
//! which holds for all pairs exactly when `IP` is convex.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::random_direction;
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::radial::radial_value;
use crate::rational::{fmt_rat, to_f64, Rat};
use crate::vector::Vector;

/// Environment variable holding the probe seed.
pub const SEED_VAR: &str = "INTERBODY_SEED";

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeResult {
    /// Smallest margin seen, `None` if every pair was skipped.
    pub min_margin: Option<f64>,
    /// First pair (in sampling order) with a negative margin.
    pub violator: Option<(Vector, Vector, Rat)>,
    pub evaluated: usize,
    /// Pairs with `rho(x) + rho(y) = 0` or `x + y = 0`.
    pub skipped: usize,
}

impl Serialize for ProbeResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let violator = self
            .violator
            .as_ref()
            .map(|(x, y, m)| serde_json::json!({"x": x, "y": y, "margin": fmt_rat(m)}));
        serde_json::json!({
            "min_margin": self.min_margin,
            "violator": violator,
            "evaluated": self.evaluated,
            "skipped": self.skipped,
        })
        .serialize(s)
    }
}

/// Seed from `INTERBODY_SEED`, defaulting to 0.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

/// `rho(x + y) - rho(x) rho(y) / (rho(x) + rho(y))`, or `None` when undefined.
pub fn midpoint_margin(p: &Polytope, x: &Vector, y: &Vector) -> Result<Option<Rat>> {
    let sum = x + y;
    if sum.is_zero() {
        return Ok(None);
    }
    let rx = radial_value(p, x)?;
    let ry = radial_value(p, y)?;
    let denom = &rx + &ry;
    if denom.is_zero() {
        return Ok(None);
    }
    Ok(Some(radial_value(p, &sum)? - rx * ry / denom))
}

/// Evaluates the margin on `pairs` seeded random direction pairs. Pairs are
/// drawn up front and evaluated in parallel, so the result does not depend
/// on the thread count.
pub fn midpoint_convexity_probe(p: &Polytope, pairs: usize, seed: u64) -> Result<ProbeResult> {
    if pairs == 0 {
        return Err(Error::DegenerateInput("at least one pair is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(Vector, Vector)> = (0..pairs)
        .map(|_| (random_direction(&mut rng, p.dim()), random_direction(&mut rng, p.dim())))
        .collect();
    let margins: Vec<Option<Rat>> = samples
        .par_iter()
        .map(|(x, y)| midpoint_margin(p, x, y))
        .collect::<Result<_>>()?;
    let mut result = ProbeResult {
        min_margin: None,
        violator: None,
        evaluated: 0,
        skipped: 0,
    };
    for ((x, y), m) in samples.into_iter().zip(margins) {
        let Some(m) = m else {
            result.skipped += 1;
            continue;
        };
        result.evaluated += 1;
        let f = to_f64(&m);
        result.min_margin = Some(result.min_margin.map_or(f, |cur| cur.min(f)));
        if m < Rat::zero() && result.violator.is_none() {
            result.violator = Some((x, y, m));
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn corner_square_is_caught() {
        let p = Polytope::axis_box(&[(int(0), int(2)), (int(0), int(2))]).unwrap();
        let r = midpoint_convexity_probe(&p, 200, 7).unwrap();
        let (x, y, m) = r.violator.unwrap();
        assert!(m < Rat::zero());
        assert_eq!(midpoint_margin(&p, &x, &y).unwrap(), Some(m));
    }

    #[test]
    fn centered_square_has_no_violator() {
        let p = Polytope::axis_box(&[(int(-1), int(1)), (int(-1), int(1))]).unwrap();
        let r = midpoint_convexity_probe(&p, 300, 7).unwrap();
        assert!(r.violator.is_none());
        assert!(r.min_margin.unwrap() >= 0.0);
    }

    #[test]
    fn deterministic() {
        let p = Polytope::axis_box(&[(int(-1), int(2)), (int(-1), int(1))]).unwrap();
        assert_eq!(
            midpoint_convexity_probe(&p, 50, 11).unwrap(),
            midpoint_convexity_probe(&p, 50, 11).unwrap()
        );
    }
}
