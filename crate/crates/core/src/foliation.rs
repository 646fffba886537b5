//! Measured foliations on the torus and their intersection number.
//!
//! A measured foliation on the torus is a single weighted slope, recorded
//! by its homology weights `(a, b)`. Simple closed curves are the primitive
//! integer pairs.

use std::fmt;

use num_integer::Integer;

use crate::numeric::Real;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct MeasuredFoliation {
    pub a: Real,
    pub b: Real,
}

impl MeasuredFoliation {
    pub fn new(a: impl Into<Real>, b: impl Into<Real>) -> Self {
        MeasuredFoliation {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_f64(a: f64, b: f64) -> Self {
        MeasuredFoliation::new(a, b)
    }

    pub fn zero() -> Self {
        MeasuredFoliation::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_exact(&self) -> bool {
        self.a.is_exact() && self.b.is_exact()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.a.to_f64(), self.b.to_f64())
    }

    pub fn scale(&self, s: &Real) -> Self {
        MeasuredFoliation {
            a: &self.a * s,
            b: &self.b * s,
        }
    }

    pub fn neg(&self) -> Self {
        MeasuredFoliation {
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// Unit-speed slope parameterization of the projective circle.
    pub fn from_angle(theta: f64) -> Self {
        MeasuredFoliation::from_f64(theta.cos(), theta.sin())
    }

    /// Whether `self` and `other` lie on a common line through the origin.
    pub fn is_proportional(&self, other: &MeasuredFoliation) -> bool {
        intersection_number(self, other).is_zero()
    }
}

impl fmt::Display for MeasuredFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A simple closed curve: a primitive integer pair with canonical sign
/// (`q > 0`, or `q == 0` and `p == 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveClass {
    pub p: i64,
    pub q: i64,
}

impl CurveClass {
    /// Canonicalizes the sign; fails unless `gcd(|p|, |q|) == 1`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.gcd(&q) != 1 {
            return Err(Error::NotPrimitive(p, q));
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) {
            (-p, -q)
        } else {
            (p, q)
        };
        Ok(CurveClass { p, q })
    }

    pub fn foliation(&self) -> MeasuredFoliation {
        MeasuredFoliation::new(self.p, self.q)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// Geometric intersection number `|a_F b_G - b_F a_G|`.
pub fn intersection_number(f: &MeasuredFoliation, g: &MeasuredFoliation) -> Real {
    (&f.a * &g.b - &f.b * &g.a).abs()
}

/// Projective representative with unit Euclidean norm, `b > 0` (or `b == 0`
/// and `a > 0`). Exact when the norm is rational.
pub fn normalize_projective(f: &MeasuredFoliation) -> Result<MeasuredFoliation> {
    if f.is_zero() {
        return Err(Error::ZeroFoliation);
    }
    let norm = (f.a.square() + f.b.square()).sqrt();
    let flip = f.b.signum() < 0 || (f.b.signum() == 0 && f.a.signum() < 0);
    let scale = if flip {
        -Real::one() / &norm
    } else {
        Real::one() / &norm
    };
    Ok(f.scale(&scale))
}

/// All canonical primitive classes with `|p| <= n` and `0 <= q <= n`, in
/// lexicographic `(p, q)` order.
pub fn curve_family(n: u32) -> Result<Vec<CurveClass>> {
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    let n = n as i64;
    let mut out = Vec::new();
    for p in -n..=n {
        for q in 0..=n {
            if p.gcd(&q) != 1 {
                continue;
            }
            if q == 0 && p != 1 {
                continue;
            }
            out.push(CurveClass { p, q });
        }
    }
    Ok(out)
}
