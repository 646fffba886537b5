//! The extended mapping class group `GL(2, Z)` of the torus.
//!
//! A class acts on foliations by the matrix-vector product and on the
//! upper half-plane so that `Ext_{A.tau}(A.F) = Ext_tau(F)`. Orientation
//! reversing classes factor through the reflection `R = diag(1, -1)`, which
//! acts by `tau -> -conj(tau)`.

use std::fmt;

use rand::Rng;

use crate::cone::ConePoint;
use crate::foliation::MeasuredFoliation;
use crate::numeric::Real;
use crate::teich::{IdealPoint, TeichPoint};
use crate::{Error, Result};

/// An integer matrix `[[a, b], [c, d]]` with determinant `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MappingClass {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

/// Generators used for random words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    S,
    T,
    TInv,
    R,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::S, Generator::T, Generator::TInv, Generator::R];

    pub fn class(self) -> MappingClass {
        match self {
            Generator::S => MappingClass::s(),
            Generator::T => MappingClass::t(),
            Generator::TInv => MappingClass::t_inv(),
            Generator::R => MappingClass::r(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::S => "S",
            Generator::T => "T",
            Generator::TInv => "T^-1",
            Generator::R => "R",
        };
        f.write_str(s)
    }
}

impl MappingClass {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a * d - b * c;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(MappingClass { a, b, c, d })
    }

    pub fn identity() -> Self {
        MappingClass {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    /// Quarter turn `[[0, -1], [1, 0]]`.
    pub fn s() -> Self {
        MappingClass {
            a: 0,
            b: -1,
            c: 1,
            d: 0,
        }
    }

    /// Dehn twist `[[1, 1], [0, 1]]`.
    pub fn t() -> Self {
        MappingClass {
            a: 1,
            b: 1,
            c: 0,
            d: 1,
        }
    }

    pub fn t_inv() -> Self {
        MappingClass {
            a: 1,
            b: -1,
            c: 0,
            d: 1,
        }
    }

    /// Reflection `[[1, 0], [0, -1]]`.
    pub fn r() -> Self {
        MappingClass {
            a: 1,
            b: 0,
            c: 0,
            d: -1,
        }
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self * other`, so `other` acts first.
    pub fn compose(&self, other: &MappingClass) -> Self {
        MappingClass {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn inverse(&self) -> Self {
        let e = self.det();
        MappingClass {
            a: e * self.d,
            b: -e * self.b,
            c: -e * self.c,
            d: e * self.a,
        }
    }

    pub fn from_word(word: &[Generator]) -> Self {
        word.iter()
            .fold(MappingClass::identity(), |acc, g| acc.compose(&g.class()))
    }

    /// A uniformly random word of length `1..=max_len` and its product.
    pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> (Self, Vec<Generator>) {
        let len = rng.random_range(1..=max_len.max(1));
        let word: Vec<Generator> = (0..len)
            .map(|_| Generator::ALL[rng.random_range(0..Generator::ALL.len())])
            .collect();
        (MappingClass::from_word(&word), word)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

pub fn act_on_foliation(m: &MappingClass, f: &MeasuredFoliation) -> MeasuredFoliation {
    let (a, b, c, d) = (
        Real::from(m.a),
        Real::from(m.b),
        Real::from(m.c),
        Real::from(m.d),
    );
    MeasuredFoliation {
        a: &a * &f.a + &b * &f.b,
        b: &c * &f.a + &d * &f.b,
    }
}

pub fn act_on_teich(m: &MappingClass, tau: &TeichPoint) -> TeichPoint {
    if m.det() == -1 {
        let reflected = TeichPoint::new(-tau.re(), tau.im().clone())
            .expect("reflection preserves the upper half-plane");
        return act_on_teich(&m.compose(&MappingClass::r()), &reflected);
    }
    let (a, b, c, d) = (
        Real::from(m.a),
        Real::from(m.b),
        Real::from(m.c),
        Real::from(m.d),
    );
    let (x, y) = (tau.re(), tau.im());
    // (a tau - b) / (-c tau + d) with numerator n1 + i n2, denominator d1 + i d2.
    let n1 = &a * x - &b;
    let d1 = &d - &c * x;
    let d2 = -(&c * y);
    let norm = d1.square() + d2.square();
    let re = (&n1 * &d1 - &a * &c * y.square()) / &norm;
    let im = y / &norm;
    TeichPoint::new(re, im).expect("unimodular action preserves the upper half-plane")
}

pub fn act_on_cone(m: &MappingClass, p: &ConePoint) -> ConePoint {
    match p {
        ConePoint::Zero => ConePoint::Zero,
        ConePoint::Interior { scale, point } => ConePoint::Interior {
            scale: *scale,
            point: act_on_teich(m, point),
        },
        ConePoint::Boundary {
            foliation,
            weight_sq,
        } => ConePoint::Boundary {
            foliation: act_on_foliation(m, foliation),
            weight_sq: weight_sq.clone(),
        },
    }
}

/// Induced action on the ideal boundary `R u {inf}`, `r -> (a r - b) / (-c r + d)`.
pub fn act_on_ideal(m: &MappingClass, r: &IdealPoint) -> IdealPoint {
    match r {
        IdealPoint::Infinity => {
            if m.c == 0 {
                IdealPoint::Infinity
            } else {
                IdealPoint::Finite(Real::ratio(-m.a, m.c))
            }
        }
        IdealPoint::Finite(r) => {
            let den = Real::from(m.d) - Real::from(m.c) * r;
            if den.is_zero() {
                IdealPoint::Infinity
            } else {
                IdealPoint::Finite((Real::from(m.a) * r - Real::from(m.b)) / den)
            }
        }
    }
}
