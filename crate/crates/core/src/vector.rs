use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{fmt_rat, gcd_of_numerators, int, lcm_of_denominators, rat_from_json, to_f64, Rat};

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = int(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_squared(&self) -> Rat {
        self.dot(self)
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    /// Counterclockwise quarter turn `(x, y) -> (-y, x)`; planar vectors only.
    pub fn rot90(&self) -> Vector {
        assert_eq!(self.dim(), 2, "rot90 is only defined in the plane");
        Vector(vec![-self.0[1].clone(), self.0[0].clone()])
    }

    /// Clockwise quarter turn `(x, y) -> (y, -x)`.
    pub fn rot_neg90(&self) -> Vector {
        assert_eq!(self.dim(), 2, "rot_neg90 is only defined in the plane");
        Vector(vec![self.0[1].clone(), -self.0[0].clone()])
    }

    pub fn cross(&self, other: &Vector) -> Vector {
        assert!(self.dim() == 3 && other.dim() == 3);
        let (a, b) = (&self.0, &other.0);
        Vector(vec![
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ])
    }

    /// Positive rescaling to a primitive integer vector (zero stays zero).
    pub fn primitive(&self) -> Vector {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_of_denominators(&self.0);
        let scaled: Vec<Rat> = self.0.iter().map(|c| c * Rat::from_integer(l.clone())).collect();
        let g = gcd_of_numerators(&scaled);
        let g = Rat::from_integer(g.abs());
        Vector(scaled.into_iter().map(|c| c / &g).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }

    /// Appends one coordinate.
    pub fn extend(&self, c: Rat) -> Vector {
        let mut coords = self.0.clone();
        coords.push(c);
        Vector(coords)
    }

    /// Drops coordinate `axis`.
    pub fn drop_axis(&self, axis: usize) -> Vector {
        Vector(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != axis)
                .map(|(_, c)| c.clone())
                .collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.denom() == &BigInt::from(1))
    }
}

/// Planar determinant `a.x * b.y - a.y * b.x`.
pub fn det2(a: &Vector, b: &Vector) -> Rat {
    &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0]
}

/// `det[a; b; c]` for three vectors of R^3.
pub fn det3(a: &Vector, b: &Vector, c: &Vector) -> Rat {
    a.cross(b).dot(c)
}

impl Index<usize> for Vector {
    type Output = Rat;

    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for Vector {
    type Output = Vector;

    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for Vector {
    type Output = Vector;

    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        -&self
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rat(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(fmt_rat))
    }
}

impl<'de> Deserialize<'de> for Vector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let values = Vec::<serde_json::Value>::deserialize(d)?;
        values
            .iter()
            .map(rat_from_json)
            .collect::<crate::Result<Vec<_>>>()
            .map(Vector)
            .map_err(serde::de::Error::custom)
    }
}

#[macro_export]
macro_rules! vector {
    ($($c:expr),* $(,)?) => {
        $crate::vector::Vector::from_ints(&[$($c),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn primitive_clears_denominators() {
        let v = Vector::new(vec![rat(1, 2), rat(-3, 4), int(0)]);
        assert_eq!(v.primitive(), vector![2, -3, 0]);
        assert_eq!(vector![4, 6].primitive(), vector![2, 3]);
    }

    #[test]
    fn quarter_turns() {
        let v = vector![1, 2];
        assert_eq!(v.rot90(), vector![-2, 1]);
        assert_eq!(v.rot90().rot_neg90(), v);
        assert_eq!(det2(&vector![1, 0], &vector![0, 1]), int(1));
    }

    #[test]
    fn cross_and_det() {
        let e = |i| Vector::unit(3, i);
        assert_eq!(e(0).cross(&e(1)), e(2));
        assert_eq!(det3(&e(0), &e(1), &e(2)), int(1));
    }
}
