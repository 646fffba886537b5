//! The Gardiner–Masur cone of the torus and the unified intersection pairing.
//!
//! On the torus the Gardiner–Masur boundary is the projective space of
//! measured foliations, so a cone element is either the vertex, a positive
//! multiple of the unscaled lift `y -> [alpha -> Ext_y(alpha)^{1/2}]`, or a
//! nonzero measured foliation. Cone elements are stored in that intrinsic
//! form; the basepoint-dependent model `(t, p)` is converted on the way in by
//! [`lift_psi`] and back out by [`cone_to_model`].
//!
//! On this representation the pairing `i(.,.)` has closed forms:
//!
//! | left \ right        | `Interior(c2, z)`        | `Boundary(G)`           |
//! |---------------------|--------------------------|-------------------------|
//! | `Interior(c1, y)`   | `c1 c2 exp(d_T(y, z))`   | `c1 Ext_y(G)^{1/2}`     |
//! | `Boundary(F)`       | `c2 Ext_z(F)^{1/2}`      | `I(F, G)`               |

use serde::{Deserialize, Serialize};

use crate::foliation::{curve_family, intersection_number, CurveClass, MeasuredFoliation};
use crate::numeric::Real;
use crate::optimize::maximize_on_slope_circle;
use crate::teich::{extremal_length, teich_distance, TeichPoint};
use crate::{Error, Result};

/// Default truncation of the curve family for function vectors.
pub const DEFAULT_TRUNCATION: u32 = 50;

/// Minimum grid size accepted by [`ext_sup_oracle`].
pub const MIN_ORACLE_SAMPLES: usize = 16;

/// Minimum grid size accepted by [`in_neighborhood`].
pub const MIN_NEIGHBORHOOD_SAMPLES: usize = 64;

/// Relative comparison tolerance; neighborhood verdicts closer than ten times
/// this to the boundary are reported as unknown.
pub const MARGIN_TOL: f64 = 1e-12;

/// A point of the Gardiner–Masur closure: an interior point or a projective
/// measured foliation (given by any nonzero representative).
#[derive(Clone, Debug, PartialEq)]
pub enum ClosurePoint {
    Interior(TeichPoint),
    Boundary(MeasuredFoliation),
}

impl ClosurePoint {
    pub fn boundary(f: MeasuredFoliation) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroFoliation);
        }
        Ok(ClosurePoint::Boundary(f))
    }
}

/// A point `t p` of the cone model; `t = 0` is the vertex for every `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelPoint {
    pub t: Real,
    pub point: ClosurePoint,
}

impl ModelPoint {
    pub fn new(t: impl Into<Real>, point: ClosurePoint) -> Result<Self> {
        let t = t.into();
        check_scale(t.to_f64())?;
        Ok(ModelPoint { t, point })
    }

    /// The slice point `1 p`.
    pub fn unit(point: ClosurePoint) -> Self {
        ModelPoint {
            t: Real::one(),
            point,
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.t.is_zero()
    }

    pub fn scaled(&self, s: &Real) -> Self {
        ModelPoint {
            t: &self.t * s,
            point: self.point.clone(),
        }
    }
}

fn check_scale(s: f64) -> Result<()> {
    if s.is_finite() && s >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidScale(s))
    }
}

/// An element of the Gardiner–Masur cone in intrinsic form.
#[derive(Clone, Debug, PartialEq)]
pub enum ConePoint {
    Zero,
    /// `scale * lift_phi(point)`, `scale > 0`.
    Interior {
        scale: f64,
        point: TeichPoint,
    },
    /// The measured foliation `sqrt(weight_sq) * foliation`. The weight is
    /// kept squared so that normalizations such as `F / Ext_x0(F)^{1/2}` stay
    /// exact on rational data.
    Boundary {
        foliation: MeasuredFoliation,
        weight_sq: Real,
    },
}

impl ConePoint {
    pub fn interior(scale: f64, point: TeichPoint) -> Result<Self> {
        check_scale(scale)?;
        if scale == 0.0 {
            return Ok(ConePoint::Zero);
        }
        Ok(ConePoint::Interior { scale, point })
    }

    /// The measured foliation `f` itself as a cone element.
    pub fn boundary(f: MeasuredFoliation) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroFoliation);
        }
        Ok(ConePoint::Boundary {
            foliation: f,
            weight_sq: Real::one(),
        })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ConePoint::Zero)
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, ConePoint::Boundary { .. })
    }

    /// Multiply by `s >= 0`.
    pub fn scaled(&self, s: &Real) -> Self {
        if s.is_zero() {
            return ConePoint::Zero;
        }
        match self {
            ConePoint::Zero => ConePoint::Zero,
            ConePoint::Interior { scale, point } => ConePoint::Interior {
                scale: scale * s.to_f64(),
                point: point.clone(),
            },
            ConePoint::Boundary {
                foliation,
                weight_sq,
            } => ConePoint::Boundary {
                foliation: foliation.clone(),
                weight_sq: weight_sq * s.square(),
            },
        }
    }

    /// The boundary element as an explicit measured foliation.
    pub fn as_foliation(&self) -> Option<MeasuredFoliation> {
        match self {
            ConePoint::Boundary {
                foliation,
                weight_sq,
            } => Some(foliation.scale(&weight_sq.sqrt())),
            _ => None,
        }
    }
}

/// The unscaled lift `y -> [alpha -> Ext_y(alpha)^{1/2}]`.
pub fn lift_phi(tau: &TeichPoint) -> ConePoint {
    ConePoint::Interior {
        scale: 1.0,
        point: tau.clone(),
    }
}

/// The basepoint-damped model map `t p -> t Psi_x0(p)`.
pub fn lift_psi(x0: &TeichPoint, m: &ModelPoint) -> ConePoint {
    if m.is_vertex() {
        return ConePoint::Zero;
    }
    match &m.point {
        ClosurePoint::Interior(tau) => ConePoint::Interior {
            scale: m.t.to_f64() * (-teich_distance(x0, tau)).exp(),
            point: tau.clone(),
        },
        ClosurePoint::Boundary(g) => ConePoint::Boundary {
            foliation: g.clone(),
            weight_sq: m.t.square() / extremal_length(x0, g),
        },
    }
}

/// Inverse of [`lift_psi`].
pub fn cone_to_model(x0: &TeichPoint, a: &ConePoint) -> ModelPoint {
    match a {
        ConePoint::Zero => ModelPoint {
            t: Real::zero(),
            point: ClosurePoint::Interior(x0.clone()),
        },
        ConePoint::Interior { scale, point } => ModelPoint {
            t: Real::from(scale * teich_distance(x0, point).exp()),
            point: ClosurePoint::Interior(point.clone()),
        },
        ConePoint::Boundary {
            foliation,
            weight_sq,
        } => ModelPoint {
            t: (weight_sq * extremal_length(x0, foliation)).sqrt(),
            point: ClosurePoint::Boundary(foliation.clone()),
        },
    }
}

/// Square of the pairing; exact whenever both arguments are boundary points
/// with rational data.
pub fn pairing_i_squared(a: &ConePoint, b: &ConePoint) -> Real {
    match (a, b) {
        (ConePoint::Zero, _) | (_, ConePoint::Zero) => Real::zero(),
        (
            ConePoint::Interior {
                scale: c1,
                point: y,
            },
            ConePoint::Interior {
                scale: c2,
                point: z,
            },
        ) => {
            let v = c1 * c2 * teich_distance(y, z).exp();
            Real::from(v * v)
        }
        (
            ConePoint::Interior { scale, point },
            ConePoint::Boundary {
                foliation,
                weight_sq,
            },
        )
        | (
            ConePoint::Boundary {
                foliation,
                weight_sq,
            },
            ConePoint::Interior { scale, point },
        ) => Real::from(scale * scale) * weight_sq * extremal_length(point, foliation),
        (
            ConePoint::Boundary {
                foliation: f,
                weight_sq: wf,
            },
            ConePoint::Boundary {
                foliation: g,
                weight_sq: wg,
            },
        ) => wf * wg * intersection_number(f, g).square(),
    }
}

/// The unified intersection pairing on the cone.
pub fn pairing_i(a: &ConePoint, b: &ConePoint) -> Real {
    match (a, b) {
        (ConePoint::Zero, _) | (_, ConePoint::Zero) => Real::zero(),
        (
            ConePoint::Interior {
                scale: c1,
                point: y,
            },
            ConePoint::Interior {
                scale: c2,
                point: z,
            },
        ) => Real::from(c1 * c2 * teich_distance(y, z).exp()),
        (
            ConePoint::Interior { scale, point },
            ConePoint::Boundary {
                foliation,
                weight_sq,
            },
        )
        | (
            ConePoint::Boundary {
                foliation,
                weight_sq,
            },
            ConePoint::Interior { scale, point },
        ) => Real::from(*scale) * (weight_sq * extremal_length(point, foliation)).sqrt(),
        (
            ConePoint::Boundary {
                foliation: f,
                weight_sq: wf,
            },
            ConePoint::Boundary {
                foliation: g,
                weight_sq: wg,
            },
        ) => (wf * wg).sqrt() * intersection_number(f, g),
    }
}

/// Pairing of two model points through the lift at `x0`.
pub fn pairing_i_based(x0: &TeichPoint, m1: &ModelPoint, m2: &ModelPoint) -> Real {
    pairing_i(&lift_psi(x0, m1), &lift_psi(x0, m2))
}

/// Intrinsic extremal length of a cone element at `y`.
pub fn ext_on_cone(y: &TeichPoint, a: &ConePoint) -> Real {
    match a {
        ConePoint::Zero => Real::zero(),
        ConePoint::Interior { scale, point } => {
            Real::from(scale * scale * (2.0 * teich_distance(y, point)).exp())
        }
        ConePoint::Boundary {
            foliation,
            weight_sq,
        } => weight_sq * extremal_length(y, foliation),
    }
}

/// `sup_F i(a, F)^2 / Ext_y(F)` evaluated numerically over the slope circle.
pub fn ext_sup_oracle(y: &TeichPoint, a: &ConePoint, samples: usize) -> Result<f64> {
    if samples < MIN_ORACLE_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_ORACLE_SAMPLES,
            got: samples,
        });
    }
    if a.is_zero() {
        return Ok(0.0);
    }
    let m = maximize_on_slope_circle(
        |theta| {
            let f = MeasuredFoliation::from_angle(theta);
            let probe = ConePoint::Boundary {
                foliation: f.clone(),
                weight_sq: Real::one(),
            };
            pairing_i_squared(a, &probe).to_f64() / extremal_length(y, &f).to_f64()
        },
        samples,
    );
    Ok(m.value)
}

/// The normalized function `E_p` on measured foliations.
///
/// Interior `y`: `(Ext_y(F) / exp(2 d_T(x0, y)))^{1/2}`.
/// Boundary `[G]`: `I(F, G) / Ext_x0(G)^{1/2}`.
pub fn e_function(x0: &TeichPoint, p: &ClosurePoint, f: &MeasuredFoliation) -> Real {
    e_function_squared(x0, p, f).sqrt()
}

/// Square of [`e_function`]; exact at boundary points with rational data.
pub fn e_function_squared(x0: &TeichPoint, p: &ClosurePoint, f: &MeasuredFoliation) -> Real {
    match p {
        ClosurePoint::Interior(y) => {
            let k = (2.0 * teich_distance(x0, y)).exp();
            Real::from(extremal_length(y, f).to_f64() / k)
        }
        ClosurePoint::Boundary(g) => intersection_number(f, g).square() / extremal_length(x0, g),
    }
}

/// `E_y` extended to the cone: `exp(-d_T(x0, y)) Ext_y(a)^{1/2}`.
pub fn e_on_cone(x0: &TeichPoint, y: &TeichPoint, a: &ConePoint) -> f64 {
    (-teich_distance(x0, y)).exp() * ext_on_cone(y, a).to_f64().sqrt()
}

/// Gromov product on the closure, `-(1/2) log i_x0(p, q)`; `+inf` when the
/// pairing vanishes.
pub fn gm_gromov_product(x0: &TeichPoint, p: &ClosurePoint, q: &ClosurePoint) -> f64 {
    let v = pairing_i_based(
        x0,
        &ModelPoint::unit(p.clone()),
        &ModelPoint::unit(q.clone()),
    );
    if v.is_zero() {
        return f64::INFINITY;
    }
    (-0.5 * v.to_f64().ln()).max(0.0)
}

/// A cone element restricted to a finite curve family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionVector {
    #[serde(with = "family_pairs")]
    pub family: Vec<CurveClass>,
    pub values: Vec<f64>,
}

mod family_pairs {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::foliation::CurveClass;

    pub fn serialize<S: Serializer>(v: &[CurveClass], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = v.iter().map(|c| [c.p, c.q]).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<CurveClass>, D::Error> {
        let pairs = Vec::<[i64; 2]>::deserialize(d)?;
        pairs
            .into_iter()
            .map(|[p, q]| CurveClass::new(p, q).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl FunctionVector {
    pub fn of_cone_point(a: &ConePoint, family: Vec<CurveClass>) -> Self {
        let values = family
            .iter()
            .map(|c| {
                let probe = ConePoint::Boundary {
                    foliation: c.foliation(),
                    weight_sq: Real::one(),
                };
                pairing_i(a, &probe).to_f64()
            })
            .collect();
        FunctionVector { family, values }
    }

    pub fn value(&self, c: &CurveClass) -> Option<f64> {
        self.family
            .iter()
            .position(|x| x == c)
            .map(|k| self.values[k])
    }
}

/// Values `alpha -> i(Psi_x0(m), alpha)` on `curve_family(n)`.
pub fn model_to_function(x0: &TeichPoint, m: &ModelPoint, n: u32) -> Result<FunctionVector> {
    let family = curve_family(n)?;
    Ok(FunctionVector::of_cone_point(&lift_psi(x0, m), family))
}

/// `log sup_alpha max(f/g, g/f)`, skipping entries where both vanish.
pub fn d_infinity(f: &FunctionVector, g: &FunctionVector) -> Result<f64> {
    if f.family != g.family {
        return Err(Error::FamilyMismatch);
    }
    let mut best = 1.0f64;
    for (&u, &v) in f.values.iter().zip(&g.values) {
        match (u == 0.0, v == 0.0) {
            (true, true) => continue,
            (true, false) | (false, true) => return Ok(f64::INFINITY),
            (false, false) => best = best.max(u / v).max(v / u),
        }
    }
    Ok(best.ln())
}

/// Whether `b` lies in the null space of `a`.
///
/// Exact boundary data is decided by exact arithmetic; otherwise the pairing
/// is compared with `tol` times `Ext_x0(a)^{1/2} Ext_x0(b)^{1/2}`.
pub fn null_test(x0: &TeichPoint, a: &ConePoint, b: &ConePoint, tol: f64) -> bool {
    if let (
        ConePoint::Boundary {
            foliation: f,
            weight_sq: wf,
        },
        ConePoint::Boundary {
            foliation: g,
            weight_sq: wg,
        },
    ) = (a, b)
    {
        if f.is_exact() && g.is_exact() && wf.is_exact() && wg.is_exact() {
            return intersection_number(f, g).is_zero();
        }
    }
    let pairing = pairing_i(a, b).to_f64();
    let scale = (ext_on_cone(x0, a).to_f64() * ext_on_cone(x0, b).to_f64()).sqrt();
    pairing <= tol * scale
}

/// Three-valued membership verdict for a neighborhood.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Membership {
    Inside,
    Outside,
    /// The sampled supremum is within numerical tolerance of the bound.
    Unknown {
        margin: f64,
    },
}

/// Decide `eta in U_delta(zeta)`.
///
/// The defining family of inequalities is indexed by the unit-extremal-length
/// foliations at `x0`, so the test reduces to comparing
/// `sup_xi |i(eta, xi) - i(zeta, xi)|` with `Ext_x0(zeta)^{1/2} delta`
/// (or with `delta` alone when `zeta` is the vertex).
pub fn in_neighborhood(
    x0: &TeichPoint,
    zeta: &ModelPoint,
    eta: &ModelPoint,
    delta: f64,
    samples: usize,
) -> Result<Membership> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::NonPositiveRadius(delta));
    }
    if samples < MIN_NEIGHBORHOOD_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_NEIGHBORHOOD_SAMPLES,
            got: samples,
        });
    }
    let za = lift_psi(x0, zeta);
    let ea = lift_psi(x0, eta);
    if za == ea {
        return Ok(Membership::Inside);
    }
    let bound = if za.is_zero() {
        delta
    } else {
        ext_on_cone(x0, &za).to_f64().sqrt() * delta
    };
    let sup = neighborhood_discrepancy(x0, &za, &ea, samples);
    let margin = bound - sup;
    if margin.abs() <= 10.0 * MARGIN_TOL * bound.max(1.0) {
        Ok(Membership::Unknown { margin })
    } else if margin > 0.0 {
        Ok(Membership::Inside)
    } else {
        Ok(Membership::Outside)
    }
}

/// `sup_xi |i(b, xi) - i(a, xi)|` over foliations `xi` with `Ext_x0(xi) = 1`.
pub fn neighborhood_discrepancy(
    x0: &TeichPoint,
    a: &ConePoint,
    b: &ConePoint,
    samples: usize,
) -> f64 {
    maximize_on_slope_circle(
        |theta| {
            let f = MeasuredFoliation::from_angle(theta);
            let xi = ConePoint::Boundary {
                weight_sq: Real::from(1.0 / extremal_length(x0, &f).to_f64()),
                foliation: f,
            };
            (pairing_i(b, &xi).to_f64() - pairing_i(a, &xi).to_f64()).abs()
        },
        samples,
    )
    .value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::teich::gromov_product;

    fn tp(x: f64, y: f64) -> TeichPoint {
        TeichPoint::new(x, y).unwrap()
    }

    fn two_i() -> TeichPoint {
        TeichPoint::new(0, 2).unwrap()
    }

    fn bd(a: i64, b: i64) -> ConePoint {
        ConePoint::boundary(MeasuredFoliation::new(a, b)).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
    }

    #[test]
    fn lift_phi_examples() {
        let i = TeichPoint::i();
        let a = lift_phi(&i);
        assert_eq!(
            a,
            ConePoint::Interior {
                scale: 1.0,
                point: i.clone()
            }
        );
        assert_eq!(pairing_i(&a, &bd(1, 0)), Real::one());
        assert_eq!(pairing_i(&a, &bd(0, 1)), Real::one());
        let b = lift_phi(&two_i());
        assert!(close(
            pairing_i(&b, &bd(1, 0)).to_f64(),
            0.5f64.sqrt(),
            1e-15
        ));
        assert!(close(pairing_i(&b, &bd(0, 1)).to_f64(), 2f64.sqrt(), 1e-15));
        assert_eq!(pairing_i(&b, &b).to_f64(), 1.0);
    }

    #[test]
    fn lift_psi_examples() {
        let i = TeichPoint::i();
        let m = ModelPoint::unit(ClosurePoint::Interior(i.clone()));
        assert_eq!(lift_psi(&i, &m), lift_phi(&i));
        let m = ModelPoint::unit(ClosurePoint::Interior(two_i()));
        match lift_psi(&i, &m) {
            ConePoint::Interior { scale, .. } => assert!(close(scale, 0.5f64.sqrt(), 1e-15)),
            other => panic!("unexpected {other:?}"),
        }
        let m = ModelPoint::unit(ClosurePoint::Boundary(MeasuredFoliation::new(1, 0)));
        let a = lift_psi(&i, &m);
        assert_eq!(a.as_foliation().unwrap(), MeasuredFoliation::new(1, 0));
        let zero = ModelPoint::new(0, ClosurePoint::Interior(two_i())).unwrap();
        assert_eq!(lift_psi(&i, &zero), ConePoint::Zero);
    }

    #[test]
    fn lift_psi_is_homogeneous() {
        let x0 = tp(0.3, 1.2);
        let s = Real::ratio(5, 2);
        for p in [
            ClosurePoint::Interior(tp(-0.4, 0.6)),
            ClosurePoint::Boundary(MeasuredFoliation::new(2, 5)),
        ] {
            let m = ModelPoint::unit(p);
            let lhs = lift_psi(&x0, &m.scaled(&s));
            let rhs = lift_psi(&x0, &m).scaled(&s);
            let probe = bd(1, 3);
            assert!(close(
                pairing_i(&lhs, &probe).to_f64(),
                pairing_i(&rhs, &probe).to_f64(),
                1e-14
            ));
        }
    }

    #[test]
    fn pairing_examples() {
        let i = TeichPoint::i();
        let p = pairing_i(&lift_phi(&i), &lift_phi(&two_i())).to_f64();
        assert!(close(p, 2f64.sqrt(), 1e-15));
        let p = pairing_i(&lift_phi(&two_i()), &bd(1, 0)).to_f64();
        assert!(close(p, 0.5f64.sqrt(), 1e-15));
        assert_eq!(pairing_i(&bd(1, 0), &bd(1, 0)), Real::zero());
        assert_eq!(pairing_i(&ConePoint::Zero, &lift_phi(&i)), Real::zero());
        assert_eq!(pairing_i(&bd(3, 1), &bd(1, 2)), Real::from(5));
    }

    #[test]
    fn based_pairing_examples() {
        let i = TeichPoint::i();
        let half_i = TeichPoint::new(0, Real::ratio(1, 2)).unwrap();
        let y = ModelPoint::unit(ClosurePoint::Interior(two_i()));
        let z = ModelPoint::unit(ClosurePoint::Interior(half_i));
        assert!(close(pairing_i_based(&i, &y, &z).to_f64(), 1.0, 1e-15));
        let f = ModelPoint::unit(ClosurePoint::Boundary(MeasuredFoliation::new(1, 0)));
        assert!(close(pairing_i_based(&i, &y, &f).to_f64(), 0.5, 1e-15));
        let base = ModelPoint::unit(ClosurePoint::Interior(i.clone()));
        for z in [tp(0.3, 0.2), tp(-2.0, 3.0)] {
            let z = ModelPoint::unit(ClosurePoint::Interior(z));
            assert!(close(pairing_i_based(&i, &base, &z).to_f64(), 1.0, 1e-13));
        }
    }

    #[test]
    fn based_pairing_is_exp_of_gromov_product() {
        let x0 = tp(0.2, 0.9);
        for (y, z) in [(tp(1.0, 2.0), tp(-1.5, 0.3)), (tp(0.0, 5.0), tp(0.1, 0.1))] {
            let p = pairing_i_based(
                &x0,
                &ModelPoint::unit(ClosurePoint::Interior(y.clone())),
                &ModelPoint::unit(ClosurePoint::Interior(z.clone())),
            );
            let g = gromov_product(&x0, &y, &z);
            assert!(close(p.to_f64(), (-2.0 * g).exp(), 1e-12));
        }
    }

    #[test]
    fn ext_on_cone_examples() {
        let i = TeichPoint::i();
        let four_i = TeichPoint::new(0, 4).unwrap();
        let a = ConePoint::interior(0.5f64.sqrt(), two_i()).unwrap();
        assert!(close(ext_on_cone(&four_i, &a).to_f64(), 1.0, 1e-14));
        assert_eq!(ext_on_cone(&i, &bd(3, 4)), Real::from(25));
        assert_eq!(ext_on_cone(&four_i, &ConePoint::Zero), Real::zero());
    }

    #[test]
    fn ext_sup_oracle_examples() {
        let i = TeichPoint::i();
        let four_i = TeichPoint::new(0, 4).unwrap();
        let v = ext_sup_oracle(&i, &bd(1, 0), 4096).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
        let v = ext_sup_oracle(&i, &lift_phi(&i), 4096).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
        let a = ConePoint::interior(0.5f64.sqrt(), two_i()).unwrap();
        let v = ext_sup_oracle(&four_i, &a, 4096).unwrap();
        assert!((v - 1.0).abs() < 1e-8);
        assert!(matches!(
            ext_sup_oracle(&i, &a, 8),
            Err(Error::TooFewSamples { min: 16, got: 8 })
        ));
    }

    #[test]
    fn e_function_examples() {
        let i = TeichPoint::i();
        let f = MeasuredFoliation::new(2, -3);
        let v = e_function(&i, &ClosurePoint::Interior(i.clone()), &f).to_f64();
        assert!(close(v, 13f64.sqrt(), 1e-15));
        // Interior points climbing the imaginary axis approach |q|.
        let f = MeasuredFoliation::new(3, 4);
        let mut prev_err = f64::INFINITY;
        for k in 1..8 {
            let t = 10f64.powi(k);
            let v = e_function(&i, &ClosurePoint::Interior(tp(0.0, t)), &f).to_f64();
            let err = (v - 4.0).abs();
            assert!(err < prev_err);
            prev_err = err;
        }
        assert!(prev_err < 1e-6);
        let v = e_function(
            &i,
            &ClosurePoint::Boundary(MeasuredFoliation::new(1, 0)),
            &f,
        );
        assert_eq!(v, Real::from(4));
    }

    #[test]
    fn gm_gromov_examples() {
        let i = TeichPoint::i();
        let f = ClosurePoint::Boundary(MeasuredFoliation::new(1, 0));
        let g = ClosurePoint::Boundary(MeasuredFoliation::new(0, 1));
        assert_eq!(gm_gromov_product(&i, &f, &g), 0.0);
        assert_eq!(gm_gromov_product(&i, &f, &f), f64::INFINITY);
        let y = ClosurePoint::Interior(two_i());
        assert!(close(gm_gromov_product(&i, &y, &f), 0.5 * 2f64.ln(), 1e-15));
    }

    #[test]
    fn model_to_function_examples() {
        let i = TeichPoint::i();
        let fv =
            model_to_function(&i, &ModelPoint::unit(ClosurePoint::Interior(i.clone())), 1).unwrap();
        let r2 = 2f64.sqrt();
        assert_eq!(fv.values, vec![r2, 1.0, 1.0, r2]);
        let fv = model_to_function(
            &i,
            &ModelPoint::new(0, ClosurePoint::Interior(two_i())).unwrap(),
            3,
        )
        .unwrap();
        assert!(fv.values.iter().all(|&v| v == 0.0));
        let fv = model_to_function(
            &i,
            &ModelPoint::unit(ClosurePoint::Boundary(MeasuredFoliation::new(1, 0))),
            1,
        )
        .unwrap();
        assert_eq!(fv.value(&CurveClass { p: 1, q: 0 }), Some(0.0));
        assert_eq!(fv.value(&CurveClass { p: 0, q: 1 }), Some(1.0));
        assert_eq!(fv.value(&CurveClass { p: 1, q: 1 }), Some(1.0));
        assert_eq!(fv.value(&CurveClass { p: -1, q: 1 }), Some(1.0));
    }

    #[test]
    fn function_vector_json_schema() {
        let i = TeichPoint::i();
        let fv = model_to_function(
            &i,
            &ModelPoint::unit(ClosurePoint::Boundary(MeasuredFoliation::new(1, 0))),
            1,
        )
        .unwrap();
        let json = serde_json::to_string(&fv).unwrap();
        assert_eq!(
            json,
            r#"{"family":[[-1,1],[0,1],[1,0],[1,1]],"values":[1.0,1.0,0.0,1.0]}"#
        );
        let back: FunctionVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, fv);
        assert!(
            serde_json::from_str::<FunctionVector>(r#"{"family":[[2,4]],"values":[1.0]}"#).is_err()
        );
    }

    #[test]
    fn d_infinity_examples() {
        let i = TeichPoint::i();
        let fam = curve_family(1).unwrap();
        let f = FunctionVector::of_cone_point(&lift_phi(&i), fam.clone());
        let g = FunctionVector::of_cone_point(&lift_phi(&two_i()), fam.clone());
        assert_eq!(d_infinity(&f, &f).unwrap(), 0.0);
        assert!(close(d_infinity(&f, &g).unwrap(), 0.5 * 2f64.ln(), 1e-15));
        let b = FunctionVector::of_cone_point(&bd(1, 0), fam);
        assert_eq!(d_infinity(&f, &b).unwrap(), f64::INFINITY);
        let other = FunctionVector::of_cone_point(&lift_phi(&i), curve_family(2).unwrap());
        assert_eq!(d_infinity(&f, &other), Err(Error::FamilyMismatch));
        // Both-zero entries are skipped.
        let z = FunctionVector::of_cone_point(&ConePoint::Zero, curve_family(1).unwrap());
        assert_eq!(d_infinity(&z, &z).unwrap(), 0.0);
    }

    #[test]
    fn null_test_examples() {
        let i = TeichPoint::i();
        assert!(null_test(&i, &bd(2, 3), &bd(4, 6), 0.0));
        assert!(!null_test(&i, &bd(1, 0), &bd(0, 1), 1e-9));
        let interior = lift_phi(&tp(0.4, 0.7));
        for b in [bd(1, 0), bd(-3, 5), lift_phi(&two_i()), interior.clone()] {
            assert!(!null_test(&i, &interior, &b, 1e-9));
        }
        // Boundary points pair to zero with themselves, interior points do not.
        assert!(null_test(&i, &bd(7, 2), &bd(7, 2), 0.0));
    }

    #[test]
    fn neighborhood_examples() {
        let i = TeichPoint::i();
        let zeta = ModelPoint::unit(ClosurePoint::Interior(i.clone()));
        assert_eq!(
            in_neighborhood(&i, &zeta, &zeta, 0.01, 256).unwrap(),
            Membership::Inside
        );
        let eta = ModelPoint::unit(ClosurePoint::Interior(two_i()));
        assert_eq!(
            in_neighborhood(&i, &zeta, &eta, 2.0, 4096).unwrap(),
            Membership::Inside
        );
        let eta = ModelPoint::new(3, ClosurePoint::Interior(i.clone())).unwrap();
        assert_eq!(
            in_neighborhood(&i, &zeta, &eta, 0.5, 4096).unwrap(),
            Membership::Outside
        );
        assert!(matches!(
            in_neighborhood(&i, &zeta, &eta, 0.0, 4096),
            Err(Error::NonPositiveRadius(_))
        ));
        assert!(in_neighborhood(&i, &zeta, &eta, 1.0, 32).is_err());
    }

    #[test]
    fn neighborhood_boundary_case_is_unknown() {
        // eta = 2 zeta differs by exactly Ext(zeta)^{1/2} on every xi.
        let i = TeichPoint::i();
        let zeta = ModelPoint::unit(ClosurePoint::Interior(i.clone()));
        let eta = ModelPoint::new(2, ClosurePoint::Interior(i.clone())).unwrap();
        assert!(matches!(
            in_neighborhood(&i, &zeta, &eta, 1.0, 256).unwrap(),
            Membership::Unknown { .. }
        ));
    }

    #[test]
    fn cone_to_model_inverts_lift_psi() {
        let x0 = tp(-0.3, 1.6);
        for m in [
            ModelPoint::new(2.5, ClosurePoint::Interior(tp(1.0, 0.2))).unwrap(),
            ModelPoint::new(
                Real::ratio(3, 4),
                ClosurePoint::Boundary(MeasuredFoliation::new(1, 2)),
            )
            .unwrap(),
        ] {
            let back = cone_to_model(&x0, &lift_psi(&x0, &m));
            assert_eq!(back.point, m.point);
            assert!(close(back.t.to_f64(), m.t.to_f64(), 1e-13));
        }
    }

    #[test]
    fn invalid_scales_rejected() {
        assert!(ConePoint::interior(-1.0, TeichPoint::i()).is_err());
        assert!(ConePoint::interior(f64::NAN, TeichPoint::i()).is_err());
        assert_eq!(
            ConePoint::interior(0.0, TeichPoint::i()).unwrap(),
            ConePoint::Zero
        );
        assert!(ConePoint::boundary(MeasuredFoliation::zero()).is_err());
        assert!(ModelPoint::new(-2.0, ClosurePoint::Interior(TeichPoint::i())).is_err());
    }
}
