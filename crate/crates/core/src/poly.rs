//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::rational::{fmt_rat, gcd_of_numerators, lcm_of_denominators, Rat};
use crate::vector::Vector;

/// Which symbols the variables print as: `x1..xd` or `t1..td`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VarKind {
    X,
    T,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    kind: VarKind,
    terms: BTreeMap<Vec<u32>, Rat>,
}

/// Graded lexicographic order on exponent vectors.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            kind: VarKind::X,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Rat::one())
    }

    /// The variable with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(e, Rat::one());
        p
    }

    /// `<c, x>` for a coefficient vector `c`.
    pub fn linear(c: &Vector) -> Self {
        let n = c.dim();
        let mut p = MPoly::zero(n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c[i].clone());
        }
        p
    }

    /// `x_1^2 + ... + x_n^2`.
    pub fn norm_squared(nvars: usize) -> Self {
        let mut p = MPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = 2;
            p.add_term(e, Rat::one());
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn with_kind(mut self, kind: VarKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term under graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&[u32], &Rat)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(e, c)| (e.as_slice(), c))
    }

    pub fn scale(&self, s: &Rat) -> MPoly {
        if s.is_zero() {
            return MPoly::zero(self.nvars).with_kind(self.kind);
        }
        MPoly {
            nvars: self.nvars,
            kind: self.kind,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong length");
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    pub fn eval_at(&self, point: &Vector) -> Rat {
        self.eval(point.coords())
    }

    /// Division with remainder by a single divisor: `self = q * g + r` where
    /// no term of `r` is divisible by the leading term of `g`.
    pub fn div_rem(&self, g: &MPoly) -> (MPoly, MPoly) {
        let (lead_e, lead_c) = match g.leading_term() {
            Some((e, c)) => (e.to_vec(), c.clone()),
            None => panic!("division by the zero polynomial"),
        };
        let mut quotient = MPoly::zero(self.nvars).with_kind(self.kind);
        let mut remainder = MPoly::zero(self.nvars).with_kind(self.kind);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.to_vec(), c.clone())) {
            if e.iter().zip(&lead_e).all(|(a, b)| a >= b) {
                let shift: Vec<u32> = e.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
                let factor = c / &lead_c;
                let term = MPoly::from_terms(self.nvars, [(shift, factor)]);
                p = &p - &(&term * g);
                quotient = &quotient + &term;
            } else {
                p.terms.remove(&e);
                remainder.add_term(e, c);
            }
        }
        (quotient, remainder)
    }

    /// `self / g` if the division is exact.
    pub fn exact_div(&self, g: &MPoly) -> Option<MPoly> {
        let (q, r) = self.div_rem(g);
        r.is_zero().then_some(q)
    }

    /// Positive multiple with coprime integer coefficients.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = lcm_of_denominators(self.terms.values());
        let scaled: Vec<Rat> = self
            .terms
            .values()
            .map(|c| c * Rat::from_integer(lcm.clone()))
            .collect();
        let gcd: BigInt = gcd_of_numerators(scaled.iter());
        let factor = Rat::new(lcm, gcd.abs());
        self.scale(&factor)
    }

    /// Primitive form with positive leading coefficient.
    pub fn normalized(&self) -> MPoly {
        let p = self.primitive();
        match p.leading_term() {
            Some((_, c)) if c.is_negative() => -&p,
            _ => p,
        }
    }

    /// Renders the polynomial with the given variable symbols.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        let mut out = String::new();
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { names[i].clone() } else { format!("{}^{}", names[i], p) })
                .collect();
            if monomial.is_empty() {
                out.push_str(&fmt_rat(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&fmt_rat(&mag));
                    out.push('*');
                }
                out.push_str(&monomial.join("*"));
            }
        }
        out
    }

    fn names(&self) -> Vec<String> {
        let sym = match self.kind {
            VarKind::X => "x",
            VarKind::T => "t",
        };
        (1..=self.nvars).map(|i| format!("{sym}{i}")).collect()
    }

    /// JSON term list `[{"exp": [...], "coef": "p/q"}, ...]`, highest terms first.
    pub fn to_json(&self) -> serde_json::Value {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|e| serde_json::json!({"exp": e, "coef": fmt_rat(&self.terms[e])}))
                .collect(),
        )
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn det(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    let nvars = m.first().and_then(|r| r.first()).map_or(0, MPoly::nvars);
    match n {
        0 => MPoly::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut total = MPoly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &det(&minor);
                total = if j % 2 == 0 { &total + &term } else { &total - &term };
            }
            total
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&self.names()))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let json = self.to_json();
        let items = json.as_array().cloned().unwrap_or_default();
        let mut seq = s.serialize_seq(Some(items.len()))?;
        for item in items {
            seq.serialize_element(&item)?;
        }
        seq.end()
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars).with_kind(self.kind);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::vector;

    fn x(i: usize) -> MPoly {
        MPoly::var(2, i)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let p = &x(0) + &x(1);
        let q = &x(0) - &x(1);
        let prod = &p * &q;
        assert_eq!(prod.to_string(), "x1^2 - x2^2");
        assert!((&prod - &prod).is_zero());
        assert_eq!(prod.total_degree(), Some(2));
        assert_eq!(MPoly::zero(2).total_degree(), None);
    }

    #[test]
    fn exact_division_by_norm() {
        let n = MPoly::norm_squared(2);
        let f = &n * &(&x(0).scale(&int(3)) - &MPoly::constant(2, rat(1, 2)));
        assert_eq!(f.exact_div(&n).unwrap(), &x(0).scale(&int(3)) - &MPoly::constant(2, rat(1, 2)));
        assert!((&f + &x(1)).exact_div(&n).is_none());
    }

    #[test]
    fn primitive_and_normalized() {
        let p = &x(0).scale(&rat(-2, 3)) + &MPoly::constant(2, rat(4, 9));
        assert_eq!(p.primitive().to_string(), "-3*x1 + 2");
        assert_eq!(p.normalized().to_string(), "3*x1 - 2");
    }

    #[test]
    fn eval_and_linear() {
        let l = MPoly::linear(&vector![2, -1]);
        assert_eq!(l.eval_at(&vector![3, 4]), int(2));
        let t = l.clone().with_kind(VarKind::T);
        assert_eq!(t.to_string(), "2*t1 - t2");
    }

    #[test]
    fn determinant_3x3() {
        // det[[x1, 1, 0], [0, x2, 1], [1, 0, 1]] = x1 x2 + 1
        let c = |v: i64| MPoly::constant(2, int(v));
        let m = vec![
            vec![x(0), c(1), c(0)],
            vec![c(0), x(1), c(1)],
            vec![c(1), c(0), c(1)],
        ];
        assert_eq!(det(&m).to_string(), "x1*x2 + 1");
    }

    #[test]
    fn json_terms() {
        let p = &x(0) - &MPoly::constant(2, int(2));
        assert_eq!(
            p.to_json().to_string(),
            r#"[{"coef":"1","exp":[1,0]},{"coef":"-2","exp":[0,0]}]"#
        );
    }
}
