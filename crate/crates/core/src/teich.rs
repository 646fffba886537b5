//! Teichmüller space of the torus.
//!
//! A marked flat torus is the lattice `Z + tau Z` with `tau = x + iy` in the
//! upper half-plane. The extremal length of the foliation `(a, b)` is
//! `|a + b tau|^2 / y`, i.e. the quadratic form of the matrix
//!
//! ```text
//! M_tau = [ 1/y    x/y          ]
//!         [ x/y    (x^2+y^2)/y  ]
//! ```
//!
//! which has determinant one. The Teichmüller distance is half the log of the
//! largest ratio of two such forms, a 2x2 generalized eigenvalue problem that
//! is solved in closed form from trace and determinant.

use std::fmt;

use crate::foliation::{normalize_projective, MeasuredFoliation};
use crate::numeric::Real;
use crate::{Error, Result};

/// A point `tau = x + iy`, `y > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TeichPoint {
    x: Real,
    y: Real,
}

impl TeichPoint {
    pub fn new(x: impl Into<Real>, y: impl Into<Real>) -> Result<Self> {
        let (x, y) = (x.into(), y.into());
        if y.signum() <= 0 || !y.to_f64().is_finite() || !x.to_f64().is_finite() {
            return Err(Error::NotInUpperHalfPlane(y.to_f64()));
        }
        Ok(TeichPoint { x, y })
    }

    /// The square torus `tau = i`, the default basepoint.
    pub fn i() -> Self {
        TeichPoint {
            x: Real::zero(),
            y: Real::one(),
        }
    }

    pub fn x(&self) -> f64 {
        self.x.to_f64()
    }

    pub fn y(&self) -> f64 {
        self.y.to_f64()
    }

    pub fn re(&self) -> &Real {
        &self.x
    }

    pub fn im(&self) -> &Real {
        &self.y
    }

    pub fn is_exact(&self) -> bool {
        self.x.is_exact() && self.y.is_exact()
    }
}

impl fmt::Display for TeichPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.x, self.y)
    }
}

/// The extremal length quadratic form at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalForm {
    pub m11: Real,
    pub m12: Real,
    pub m22: Real,
}

impl ExtremalForm {
    pub fn at(tau: &TeichPoint) -> Self {
        let inv_y = Real::one() / &tau.y;
        ExtremalForm {
            m12: &tau.x * &inv_y,
            m22: (tau.x.square() + tau.y.square()) * &inv_y,
            m11: inv_y,
        }
    }

    pub fn eval(&self, f: &MeasuredFoliation) -> Real {
        &self.m11 * f.a.square()
            + Real::from(2) * &self.m12 * &f.a * &f.b
            + &self.m22 * f.b.square()
    }

    pub fn det(&self) -> Real {
        &self.m11 * &self.m22 - self.m12.square()
    }

    fn to_f64(&self) -> [f64; 3] {
        [self.m11.to_f64(), self.m12.to_f64(), self.m22.to_f64()]
    }
}

/// `Ext_tau(F) = |a + b tau|^2 / y`; exact for rational data.
pub fn extremal_length(tau: &TeichPoint, f: &MeasuredFoliation) -> Real {
    let re = &f.a + &f.b * &tau.x;
    let im = &f.b * &tau.y;
    (re.square() + im.square()) / &tau.y
}

/// Half the excess of the pencil trace over two, `(tr(M2^-1 M1) - 2) / 2`.
///
/// The pencil eigenvalues are `lambda` and `1/lambda`, so this equals
/// `(lambda + 1/lambda)/2 - 1`. Exact when both points are rational.
fn pencil_excess(t1: &TeichPoint, t2: &TeichPoint) -> Real {
    let m1 = ExtremalForm::at(t1);
    let m2 = ExtremalForm::at(t2);
    // adj(M2) = [[m22, -m12], [-m12, m11]] is the inverse since det M2 = 1.
    // Grouped so that swapping the arguments gives a bitwise identical result.
    let diagonal = &m2.m22 * &m1.m11 + &m2.m11 * &m1.m22;
    let trace = diagonal - Real::from(2) * (&m2.m12 * &m1.m12);
    (trace - Real::from(2)) / Real::from(2)
}

/// `lambda_max - 1` from the pencil excess `g`, free of cancellation.
fn lambda_minus_one(g: f64) -> f64 {
    let g = g.max(0.0);
    g + (g * (g + 2.0)).sqrt()
}

/// Teichmüller distance by the extremal length ratio formula.
pub fn teich_distance(t1: &TeichPoint, t2: &TeichPoint) -> f64 {
    if t1 == t2 {
        return 0.0;
    }
    let g = pencil_excess(t1, t2).to_f64();
    0.5 * lambda_minus_one(g).ln_1p()
}

/// Generalized eigenvectors realizing both extreme ratios.
#[derive(Clone, Debug, PartialEq)]
pub struct SharpPair {
    /// Maximizes `Ext_t1 / Ext_t2`, normalized to `Ext_x0 = 1`.
    pub maximizer: MeasuredFoliation,
    /// Maximizes `Ext_t2 / Ext_t1`, normalized to `Ext_x0 = 1`.
    pub minimizer: MeasuredFoliation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KerckhoffSup {
    pub lambda_max: f64,
    /// `None` when the two points coincide and every foliation is extremal.
    pub pair: Option<SharpPair>,
}

impl KerckhoffSup {
    pub fn is_isotropic(&self) -> bool {
        self.pair.is_none()
    }

    pub fn distance(&self) -> f64 {
        0.5 * self.lambda_max.ln()
    }
}

/// `sup_F Ext_t1(F) / Ext_t2(F)` together with its maximizing and minimizing
/// foliations, both normalized to unit extremal length at `x0`.
pub fn kerckhoff_sup(t1: &TeichPoint, t2: &TeichPoint, x0: &TeichPoint) -> KerckhoffSup {
    if t1 == t2 {
        return KerckhoffSup {
            lambda_max: 1.0,
            pair: None,
        };
    }
    let lm1 = lambda_minus_one(pencil_excess(t1, t2).to_f64());
    let lambda = 1.0 + lm1;
    let m1 = ExtremalForm::at(t1).to_f64();
    let m2 = ExtremalForm::at(t2).to_f64();
    let maximizer = pencil_null_vector(m1, m2, lambda);
    let minimizer = pencil_null_vector(m1, m2, 1.0 / lambda);
    KerckhoffSup {
        lambda_max: lambda,
        pair: Some(SharpPair {
            maximizer: normalize_at(&maximizer, x0),
            minimizer: normalize_at(&minimizer, x0),
        }),
    }
}

/// Kernel of `M1 - lambda M2` for a rank-one symmetric 2x2 matrix.
fn pencil_null_vector(m1: [f64; 3], m2: [f64; 3], lambda: f64) -> MeasuredFoliation {
    let c11 = m1[0] - lambda * m2[0];
    let c12 = m1[1] - lambda * m2[1];
    let c22 = m1[2] - lambda * m2[2];
    let from_row1 = (-c12, c11);
    let from_row2 = (-c22, c12);
    let n1 = from_row1.0.hypot(from_row1.1);
    let n2 = from_row2.0.hypot(from_row2.1);
    let v = if n1 >= n2 { from_row1 } else { from_row2 };
    MeasuredFoliation::from_f64(v.0, v.1)
}

/// Rescale to `Ext_x0 = 1` with the canonical projective sign.
pub fn normalize_at(f: &MeasuredFoliation, x0: &TeichPoint) -> MeasuredFoliation {
    let unit = normalize_projective(f).expect("nonzero eigenvector");
    let ext = extremal_length(x0, &unit);
    unit.scale(&(Real::one() / ext.sqrt()))
}

/// Gromov product `(d(x0,y) + d(x0,z) - d(y,z)) / 2`.
pub fn gromov_product(x0: &TeichPoint, y: &TeichPoint, z: &TeichPoint) -> f64 {
    let v = 0.5 * (teich_distance(x0, y) + teich_distance(x0, z) - teich_distance(y, z));
    v.max(0.0)
}

/// Sharp partner for Minsky's inequality: the `G` (unique up to scale) with
/// `I(F, G)^2 = Ext_tau(F) Ext_tau(G)`. Exact for rational data.
pub fn minsky_partner(tau: &TeichPoint, f: &MeasuredFoliation) -> MeasuredFoliation {
    let m = ExtremalForm::at(tau);
    let u = &m.m11 * &f.a + &m.m12 * &f.b;
    let v = &m.m12 * &f.a + &m.m22 * &f.b;
    MeasuredFoliation { a: -v, b: u }
}

/// Principal axes of `M_tau`: the horizontal and vertical foliations of the
/// quadratic differential whose Teichmüller disk is straight at `tau`.
pub fn principal_pair(tau: &TeichPoint) -> (MeasuredFoliation, MeasuredFoliation) {
    let [a, b, c] = ExtremalForm::at(tau).to_f64();
    let half_gap = (0.25 * (a - c) * (a - c) + b * b).sqrt();
    let mu = 0.5 * (a + c) + half_gap;
    let v1 = if b.abs() > 0.0 || a < c {
        // (M - mu) v = 0
        let r1 = (b, mu - a);
        let r2 = (mu - c, b);
        if r1.0.hypot(r1.1) >= r2.0.hypot(r2.1) {
            r1
        } else {
            r2
        }
    } else {
        (1.0, 0.0)
    };
    let f = MeasuredFoliation::from_f64(v1.0, v1.1);
    let g = MeasuredFoliation::from_f64(-v1.1, v1.0);
    (f, g)
}

/// A point of the ideal boundary `R ∪ {∞}` of the upper half-plane.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealPoint {
    Finite(Real),
    Infinity,
}

impl IdealPoint {
    pub fn to_f64(&self) -> f64 {
        match self {
            IdealPoint::Finite(r) => r.to_f64(),
            IdealPoint::Infinity => f64::INFINITY,
        }
    }
}

impl fmt::Display for IdealPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealPoint::Finite(r) => write!(f, "{r}"),
            IdealPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// The projective foliation whose extremal length vanishes toward `r`:
/// `∞ -> (1, 0)`, finite `r -> (-r, 1)`.
pub fn boundary_slope(r: &IdealPoint) -> MeasuredFoliation {
    match r {
        IdealPoint::Infinity => MeasuredFoliation::new(1, 0),
        IdealPoint::Finite(r) => MeasuredFoliation {
            a: -r,
            b: Real::one(),
        },
    }
}

/// Inverse of [`boundary_slope`]: `[(p, q)] -> -p/q`, with `q = 0 -> ∞`.
pub fn boundary_point(f: &MeasuredFoliation) -> Result<IdealPoint> {
    if f.is_zero() {
        return Err(Error::ZeroFoliation);
    }
    if f.b.is_zero() {
        Ok(IdealPoint::Infinity)
    } else {
        Ok(IdealPoint::Finite(-(&f.a / &f.b)))
    }
}

/// Real Möbius map `z -> (a z + b)/(c z + d)` with `ad - bc = 1`, written to
/// keep the imaginary part free of cancellation.
fn mobius(m: [f64; 4], z: (f64, f64)) -> (f64, f64) {
    let [a, b, c, d] = m;
    let (x, y) = z;
    let dr = c * x + d;
    let di = c * y;
    let norm = dr * dr + di * di;
    let re = ((a * x + b) * dr + a * c * y * y) / norm;
    let im = y / norm;
    (re, im)
}

/// Point at Teichmüller distance `t` from `tau0` along the ray whose vertical
/// foliation is `alpha`; `Ext_ray(t)(alpha) = e^{-2t} Ext_tau0(alpha)`.
pub fn geodesic_ray(tau0: &TeichPoint, alpha: &MeasuredFoliation, t: f64) -> Result<TeichPoint> {
    let end = boundary_point(alpha)?;
    if t == 0.0 {
        return Ok(tau0.clone());
    }
    let (x0, y0) = (tau0.x(), tau0.y());
    // Rotation about i sending ∞ to u, where u is the endpoint seen from
    // the chart z -> x0 + y0 z.
    let rot = match &end {
        IdealPoint::Infinity => [1.0, 0.0, 0.0, 1.0],
        IdealPoint::Finite(r) => {
            let u = (r.to_f64() - x0) / y0;
            let n = (u * u + 1.0).sqrt();
            let (c, s) = (u / n, -1.0 / n);
            [c, s, -s, c]
        }
    };
    let (wx, wy) = mobius(rot, (0.0, (2.0 * t).exp()));
    TeichPoint::new(x0 + y0 * wx, y0 * wy)
}

/// Ideal endpoints `(backward, forward)` of the geodesic through two distinct
/// points, oriented from `t1` to `t2`.
pub fn geodesic_endpoints(t1: &TeichPoint, t2: &TeichPoint) -> Option<(IdealPoint, IdealPoint)> {
    let sup = kerckhoff_sup(t1, t2, t1);
    let pair = sup.pair?;
    let forward = boundary_point(&pair.maximizer).ok()?;
    let backward = boundary_point(&pair.minimizer).ok()?;
    Some((backward, forward))
}
