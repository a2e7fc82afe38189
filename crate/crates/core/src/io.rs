//! JSON interchange for polytopes and command-line value parsing.
//!
//! A polytope file looks like
//! `{"dim": 2, "vertices": [["1/2", 0], [1, 1], ...], "facets": [[0, 1], ...]}`.
//! Coordinates are integers or `"p/q"` strings; `facets` may be omitted for
//! `d <= 3`.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polytope::{build_polytope, Polytope};
use crate::rational::{fmt_rat, parse_rat, rat_from_json, Rat};
use crate::vector::Vector;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vec<Value>>,
    #[serde(default)]
    facets: Option<Vec<Vec<usize>>>,
}

/// Parses polytope JSON; syntax errors carry line and column.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let file: PolytopeFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e)))?;
    let vertices = file
        .vertices
        .iter()
        .map(|row| {
            if row.len() != file.dim {
                return Err(Error::DimensionMismatch {
                    expected: file.dim,
                    found: row.len(),
                });
            }
            Ok(Vector::new(row.iter().map(rat_from_json).collect::<Result<Vec<Rat>>>()?))
        })
        .collect::<Result<Vec<Vector>>>()?;
    build_polytope(&vertices, file.facets.as_deref())
}

pub fn read_polytope(path: impl AsRef<Path>) -> Result<Polytope> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_polytope(&text)
}

fn rat_json(r: &Rat) -> Value {
    if r.is_integer() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return json!(i);
        }
    }
    json!(fmt_rat(r))
}

/// Polytope JSON with integer coordinates as numbers and others as `"p/q"`.
/// Facets are written for `d >= 3`.
pub fn polytope_to_json(p: &Polytope) -> Value {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(v.coords().iter().map(rat_json).collect()))
        .collect();
    let mut out = json!({"dim": p.dim(), "vertices": vertices});
    if p.dim() >= 3 {
        out["facets"] = json!(p.facet_sets());
    }
    out
}

/// Parses `"r,r,..."` into a vector.
pub fn parse_vector(s: &str) -> Result<Vector> {
    let coords = s
        .split(',')
        .map(parse_rat)
        .collect::<Result<Vec<Rat>>>()?;
    if coords.is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    Ok(Vector::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn round_trip() {
        for p in [catalog::triangle(), catalog::skew_hexagon(), catalog::cube(3, 0, 2), catalog::icosahedron()] {
            let text = polytope_to_json(&p).to_string();
            let q = parse_polytope(&text).unwrap();
            assert_eq!(p, q);
            assert_eq!(polytope_to_json(&q).to_string(), text);
        }
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_polytope("{\"dim\": 2,\n \"vertices\": [[0, 1], [1,]]}").unwrap_err();
        let Error::Parse(msg) = err else { panic!() };
        assert!(msg.starts_with("line 2, column"), "{msg}");
        let err = parse_polytope(r#"{"dim": 2, "vertices": [[0, 1, 2]]}"#).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let err = parse_polytope(r#"{"dim": 2, "vertices": [[0, 0], [1, 1], [2, 2]]}"#).unwrap_err();
        assert!(matches!(err, Error::DegenerateInput(_)));
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1/2, -3").unwrap(), Vector::new(vec![crate::rational::rat(1, 2), crate::rational::int(-3)]));
        assert!(parse_vector("1,x").is_err());
    }
}
