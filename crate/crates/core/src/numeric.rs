//! Dual-path scalars: exact rationals where the data allows, binary64 otherwise.
//!
//! Every geometric quantity on the torus is a polynomial or rational function
//! of the input coordinates until a square root, exponential or logarithm is
//! taken. [`Real`] keeps values exact through that polynomial stage so that
//! zero tests (null spaces, light cone, self-intersection) are decided without
//! rounding. Mixing an exact and an approximate operand yields an approximate
//! result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Default relative tolerance for approximate comparisons.
pub const DEFAULT_REL_TOL: f64 = 1e-12;

/// A real number that is either an exact rational or an `f64` approximation.
#[derive(Clone, Debug)]
pub enum Real {
    Exact(BigRational),
    Approx(f64),
}

impl Real {
    pub fn zero() -> Self {
        Real::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Real::Exact(BigRational::one())
    }

    /// Exact rational `num / den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Real::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Real::Exact(r) => Some(r),
            Real::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Exact(r) => rational_to_f64(r),
            Real::Approx(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Exact(r) => r.is_zero(),
            Real::Approx(x) => *x == 0.0,
        }
    }

    /// Sign as -1, 0 or 1 (approximate NaN maps to 0).
    pub fn signum(&self) -> i32 {
        match self {
            Real::Exact(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
            Real::Approx(x) => {
                if *x > 0.0 {
                    1
                } else if *x < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Real::Exact(r) => Real::Exact(r.abs()),
            Real::Approx(x) => Real::Approx(x.abs()),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Square root; stays exact when the argument is the square of a rational.
    ///
    /// Negative arguments yield `Approx(NaN)`.
    pub fn sqrt(&self) -> Self {
        match self {
            Real::Exact(r) if !r.is_negative() => match exact_sqrt(r) {
                Some(s) => Real::Exact(s),
                None => Real::Approx(rational_to_f64(r).sqrt()),
            },
            other => Real::Approx(other.to_f64().sqrt()),
        }
    }

    /// Approximate equality: exact operands compare exactly, otherwise
    /// `|a - b| <= rel_tol * max(1, |a|, |b|)`.
    pub fn approx_eq(&self, other: &Real, rel_tol: f64) -> bool {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_f64(), other.to_f64());
                (a - b).abs() <= rel_tol * 1f64.max(a.abs()).max(b.abs())
            }
        }
    }
}

/// Convert a rational to the nearest-ish `f64` without overflowing on large
/// numerators and denominators.
fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    let (n, d) = (r.numer(), r.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(900);
    let n = n >> shift;
    let d = d >> shift;
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    if &(&sn * &sn) != n {
        return None;
    }
    let sd = d.sqrt();
    if &(&sd * &sd) != d {
        return None;
    }
    Some(BigRational::new(sn, sd))
}

impl From<i64> for Real {
    fn from(v: i64) -> Self {
        Real::Exact(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<i32> for Real {
    fn from(v: i32) -> Self {
        Real::from(v as i64)
    }
}

impl From<f64> for Real {
    fn from(v: f64) -> Self {
        Real::Approx(v)
    }
}

impl From<BigRational> for Real {
    fn from(v: BigRational) -> Self {
        Real::Exact(v)
    }
}

impl From<num_rational::Rational64> for Real {
    fn from(v: num_rational::Rational64) -> Self {
        Real::Exact(BigRational::new(
            BigInt::from(*v.numer()),
            BigInt::from(*v.denom()),
        ))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Real::Exact(a), Real::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Exact(r) => write!(f, "{r}"),
            Real::Approx(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.to_f64())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt, $exact:expr) => {
        impl<'a, 'b> $trait<&'b Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'b Real) -> Real {
                match (self, rhs) {
                    (Real::Exact(a), Real::Exact(b)) => $exact(a, b),
                    _ => Real::Approx(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &'b Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, +, |a: &BigRational, b: &BigRational| Real::Exact(a + b));
forward_binop!(Sub, sub, -, |a: &BigRational, b: &BigRational| Real::Exact(a - b));
forward_binop!(Mul, mul, *, |a: &BigRational, b: &BigRational| Real::Exact(a * b));
// Exact division by zero degrades to the IEEE result instead of panicking.
forward_binop!(Div, div, /, |a: &BigRational, b: &BigRational| {
    if b.is_zero() {
        Real::Approx(rational_to_f64(a) / 0.0)
    } else {
        Real::Exact(a / b)
    }
});

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        match self {
            Real::Exact(r) => Real::Exact(-r),
            Real::Approx(x) => Real::Approx(-x),
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        self.clone().neg()
    }
}

/// Relative tolerance used when comparing approximate quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: DEFAULT_REL_TOL,
        }
    }
}

impl Tolerance {
    pub fn new(rel: f64) -> Self {
        Tolerance { rel }
    }

    pub fn eq(&self, a: &Real, b: &Real) -> bool {
        a.approx_eq(b, self.rel)
    }

    pub fn eq_f64(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.rel * 1f64.max(a.abs()).max(b.abs())
    }
}
