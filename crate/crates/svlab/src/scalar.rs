//! Coordinate scalars and planar vectors.
//!
//! All geometry in this crate is generic over a [`Scalar`]: either exact
//! arbitrary-precision rationals ([`Rat`]) or `f64`. Exact scalars give exact
//! sign predicates; the float impl treats quantities below a relative
//! tolerance of the ambient scale as zero, so that near-misses produced by
//! rounding are classified the same way the exact path would classify the
//! underlying exact configuration.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational coordinate type.
pub type Rat = BigRational;

/// Relative tolerance for float predicates. Matches the direction-grouping
/// and cone-angle tolerances used elsewhere in the crate.
pub const FLOAT_REL_TOL: f64 = 1e-9;

/// Coordinate scalar: exact rational or double float.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn to_f64(&self) -> f64;

    /// Sign of `self` measured against a nonnegative magnitude `scale`:
    /// returns 0 when `self` is (tolerably) zero relative to `scale`.
    /// Exact scalars ignore `scale`.
    fn sign_scaled(&self, scale: &Self) -> i8;

    /// Plain sign, with the float impl using an absolute epsilon of 0.
    fn sign(&self) -> i8;

    fn abs(&self) -> Self;

    /// Exact wire representation ("p/q"), when the scalar is exact.
    fn to_exact_string(&self) -> Option<String>;

    fn is_zero(&self) -> bool {
        self.sign() == 0
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }

    fn sign_scaled(&self, scale: &Self) -> i8 {
        let tol = FLOAT_REL_TOL * f64::abs(*scale);
        if *self > tol {
            1
        } else if *self < -tol {
            -1
        } else {
            0
        }
    }

    fn sign(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_exact_string(&self) -> Option<String> {
        None
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sign_scaled(&self, _scale: &Self) -> i8 {
        self.sign()
    }

    fn sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_exact_string(&self) -> Option<String> {
        Some(format_rat(self))
    }
}

/// Planar vector over a coordinate scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Vec2<S> {
    pub fn new(x: S, y: S) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(S::zero(), S::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, other: &Self) -> S {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn scale(&self, s: &S) -> Self {
        Vec2::new(self.x.clone() * s.clone(), self.y.clone() * s.clone())
    }

    pub fn to_f64(&self) -> Vec2<f64> {
        Vec2::new(self.x.to_f64(), self.y.to_f64())
    }

    /// Sign of the cross product, measured relative to |a||b|.
    pub fn cross_sign(&self, other: &Self) -> i8 {
        let c = self.cross(other);
        if S::EXACT {
            c.sign()
        } else {
            let scale = (self.norm_sq().to_f64() * other.norm_sq().to_f64()).sqrt();
            let tol = FLOAT_REL_TOL * scale.max(f64::MIN_POSITIVE);
            let cf = c.to_f64();
            if cf > tol {
                1
            } else if cf < -tol {
                -1
            } else {
                0
            }
        }
    }

    /// True when the two vectors are parallel (zero cross product); the float
    /// impl uses |cross| <= tol * |a| * |b|.
    pub fn parallel(&self, other: &Self) -> bool {
        let c = self.cross(other);
        if S::EXACT {
            c.is_zero()
        } else {
            let scale = (self.norm_sq().to_f64() * other.norm_sq().to_f64()).sqrt();
            c.to_f64().abs() <= FLOAT_REL_TOL * scale.max(f64::MIN_POSITIVE)
        }
    }
}

impl<S: Scalar> Add for Vec2<S> {
    type Output = Vec2<S>;
    fn add(self, rhs: Self) -> Self {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub for Vec2<S> {
    type Output = Vec2<S>;
    fn sub(self, rhs: Self) -> Self {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Neg for Vec2<S> {
    type Output = Vec2<S>;
    fn neg(self) -> Self {
        Vec2::new(-self.x, -self.y)
    }
}

impl<S: Scalar> Vec2<S> {
    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }
    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
}

/// Parse a rational from the wire format "p/q" or "p".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Render a rational in the wire format "p/q" (or "p" for integers).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_wire_format_round_trips() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn float_sign_scaled_tolerates_rounding() {
        let tiny = 1e-13;
        assert_eq!(tiny.sign_scaled(&1.0), 0);
        assert_eq!(1e-3.sign_scaled(&1.0), 1);
        assert_eq!((-1e-3).sign_scaled(&1.0), -1);
    }

    #[test]
    fn parallel_predicate() {
        let a = Vec2::new(1.0, 2.0);
        let b = Vec2::new(2.0, 4.0 + 1e-13);
        assert!(a.parallel(&b));
        let r1: Vec2<Rat> = Vec2::new(Scalar::from_i64(1), Scalar::from_i64(2));
        let r2: Vec2<Rat> = Vec2::new(Scalar::from_i64(-2), Scalar::from_i64(-4));
        assert!(r1.parallel(&r2));
    }
}
