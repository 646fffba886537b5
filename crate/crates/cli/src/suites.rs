//! Verification suites: every library invariant as a seeded, repeatable
//! property check.
//!
//! A check maps one trial to an error. Exact properties report `0` when the
//! identity holds in exact arithmetic and a positive discrepancy otherwise;
//! numeric properties report a relative error. A property passes when its
//! largest error is within its tolerance. Numeric tolerances are stated at
//! the default `--tol` and scale with it.

use gmcone::cone::{
    cone_to_model, d_infinity, e_function_squared, e_on_cone, ext_on_cone, ext_sup_oracle,
    gm_gromov_product, in_neighborhood, lift_phi, lift_psi, null_test, pairing_i, pairing_i_based,
    pairing_i_squared, ClosurePoint, ConePoint, FunctionVector, Membership, ModelPoint,
};
use gmcone::foliation::{curve_family, intersection_number, normalize_projective};
use gmcone::mcg::{act_on_cone, act_on_foliation, act_on_ideal, act_on_teich, MappingClass};
use gmcone::optimize::maximize_on_slope_circle;
use gmcone::teich::{
    boundary_slope, extremal_length, geodesic_ray, gromov_product, kerckhoff_sup, minsky_partner,
    principal_pair, teich_distance, IdealPoint,
};
use gmcone::walsh::{
    b0, dijkstra_distance, horofunction, walsh_distance, walsh_gromov, x1, x2, y1, y2,
};
use gmcone::{MeasuredFoliation, Real, TeichPoint};
use num_rational::Rational64;
use rand::Rng;
use rayon::prelude::*;

use crate::config::{RunConfig, DEFAULT_TOL};
use crate::report::{PropertyRecord, VerifyReport};
use crate::sampling::{self as s, TrialRng};

pub const SUITES: [&str; 6] = ["foliation", "teich", "cone", "mcg", "walsh", "all"];

/// Stream reserved for data shared by all trials of a property.
const SAMPLE_STREAM: usize = 0xffff;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Mode {
    Exact,
    /// Tolerance at the default `--tol`.
    Tol(f64),
}

#[derive(Clone, Copy, Debug)]
enum Trials {
    /// Count at the default of 500 trials; scales with `--trials`.
    Scaled(usize),
    Fixed(usize),
}

type Check = fn(&RunConfig, &mut TrialRng, usize) -> f64;

struct Property {
    id: &'static str,
    anchor: &'static str,
    mode: Mode,
    trials: Trials,
    check: Check,
}

impl Property {
    fn suite(&self) -> &str {
        self.id.split('.').next().unwrap_or("")
    }

    fn trial_count(&self, config: &RunConfig) -> usize {
        match self.trials {
            Trials::Fixed(n) => n,
            Trials::Scaled(n) => (n * config.trials / 500).max(1),
        }
    }

    fn tolerance(&self, config: &RunConfig) -> f64 {
        match self.mode {
            Mode::Exact => 0.0,
            Mode::Tol(t) => t * config.tol / DEFAULT_TOL,
        }
    }
}

/// Run a suite by name; `None` for an unknown name.
pub fn run_suite(suite: &str, config: &RunConfig) -> Option<VerifyReport> {
    if !SUITES.contains(&suite) {
        return None;
    }
    let table = properties();
    let records: Vec<PropertyRecord> = table
        .par_iter()
        .enumerate()
        .filter(|(_, p)| suite == "all" || p.suite() == suite)
        .map(|(ordinal, p)| run_property(ordinal, p, config))
        .collect();
    Some(VerifyReport::new(suite, config.echo(), records))
}

/// Ids of all properties in report order.
pub fn property_ids() -> Vec<&'static str> {
    properties().iter().map(|p| p.id).collect()
}

fn run_property(ordinal: usize, p: &Property, config: &RunConfig) -> PropertyRecord {
    let n = p.trial_count(config);
    let errors: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|k| {
            let mut rng = s::trial_rng(config.seed, ordinal, k);
            let e = (p.check)(config, &mut rng, k);
            if e.is_nan() {
                f64::INFINITY
            } else {
                e
            }
        })
        .collect();
    let max_error = errors.into_iter().fold(0.0, f64::max);
    let tolerance = p.tolerance(config);
    PropertyRecord {
        id: p.id.to_string(),
        anchor: p.anchor.to_string(),
        trials: n,
        max_error,
        tolerance,
        exact: p.mode == Mode::Exact,
        pass: max_error <= tolerance,
    }
}

fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

/// Relative deviation of a ratio from one.
fn ratio_err(value: f64, target: f64) -> f64 {
    if value == target {
        return 0.0;
    }
    (value / target - 1.0).abs()
}

fn exact_err(a: &Real, b: &Real) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs().to_f64().max(f64::MIN_POSITIVE)
    }
}

fn rational_err(a: Rational64, b: Rational64) -> f64 {
    if a == b {
        0.0
    } else {
        let d = num_traits::Signed::abs(&(a - b));
        (*d.numer() as f64 / *d.denom() as f64).max(f64::MIN_POSITIVE)
    }
}

fn holds(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn boundary(f: MeasuredFoliation) -> ConePoint {
    ConePoint::boundary(f).expect("nonzero foliation")
}

fn interior_slice(tau: TeichPoint) -> ModelPoint {
    ModelPoint::unit(ClosurePoint::Interior(tau))
}

fn ext_at_basepoint(config: &RunConfig, m: &ModelPoint) -> f64 {
    let x0 = &config.basepoint;
    ext_on_cone(x0, &lift_psi(x0, m)).to_f64()
}

fn properties() -> Vec<Property> {
    use Mode::*;
    use Trials::*;
    vec![
        // ---- foliations
        Property {
            id: "foliation.intersection-symmetric",
            anchor: "intersection number: symmetry",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let f = s::int_foliation(rng, 1_000_000);
                let g = s::int_foliation(rng, 1_000_000);
                exact_err(&intersection_number(&f, &g), &intersection_number(&g, &f))
            },
        },
        Property {
            id: "foliation.intersection-bihomogeneous",
            anchor: "intersection number: bihomogeneity under nonnegative scaling",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let f = s::int_foliation(rng, 1000);
                let g = s::int_foliation(rng, 1000);
                let a = Real::ratio(rng.random_range(0..=100), rng.random_range(1..=100));
                let b = Real::ratio(rng.random_range(0..=100), rng.random_range(1..=100));
                let lhs = intersection_number(&f.scale(&a), &g.scale(&b));
                exact_err(&lhs, &(&a * &b * intersection_number(&f, &g)))
            },
        },
        Property {
            id: "foliation.intersection-zero-iff-proportional",
            anchor: "unique ergodicity on the torus: I(F,G) = 0 iff proportional",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let (p, q) = (rng.random_range(-50i64..=50), rng.random_range(-50i64..=50));
                let (r, t) = if rng.random_bool(0.5) {
                    let k = rng.random_range(-9i64..=9);
                    (k * p, k * q)
                } else {
                    (rng.random_range(-50i64..=50), rng.random_range(-50i64..=50))
                };
                let direction = |a: i64, b: i64| {
                    use num_integer::Integer;
                    let g = a.gcd(&b);
                    let (a, b) = (a / g, b / g);
                    if b < 0 || (b == 0 && a < 0) {
                        (-a, -b)
                    } else {
                        (a, b)
                    }
                };
                let zero = (p, q) == (0, 0) || (r, t) == (0, 0);
                let proportional = zero || direction(p, q) == direction(r, t);
                let i = intersection_number(
                    &MeasuredFoliation::new(p, q),
                    &MeasuredFoliation::new(r, t),
                );
                holds(i.is_zero() == proportional)
            },
        },
        Property {
            id: "foliation.normalize-idempotent",
            anchor: "projective normalization: idempotent and scale invariant",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let f = s::int_foliation(rng, 1000);
                let n = normalize_projective(&f).unwrap();
                let nn = normalize_projective(&n).unwrap();
                let ns = normalize_projective(&f.scale(&s::positive_rational(rng))).unwrap();
                let (a, b) = n.to_f64();
                [nn.to_f64(), ns.to_f64()]
                    .iter()
                    .map(|(c, d)| rel_err(a, *c).max(rel_err(b, *d)))
                    .fold(0.0, f64::max)
            },
        },
        // ---- Teichmüller space
        Property {
            id: "teich.kerckhoff-grid-oracle",
            anchor: "Kerckhoff formula: pencil eigenvalue vs sampled supremum",
            mode: Tol(1e-9),
            trials: Scaled(500),
            check: |config, rng, _| {
                let (a, b) = (s::box_tau(rng), s::box_tau(rng));
                let sup = maximize_on_slope_circle(
                    |theta| {
                        let f = MeasuredFoliation::from_angle(theta);
                        extremal_length(&a, &f).to_f64() / extremal_length(&b, &f).to_f64()
                    },
                    config.samples,
                );
                rel_err(0.5 * sup.value.ln(), teich_distance(&a, &b))
            },
        },
        Property {
            id: "teich.distance-closed-form",
            anchor: "Kerckhoff formula: half the hyperbolic distance",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let (a, b) = (s::box_tau(rng), s::box_tau(rng));
                let (dx, dy) = (a.x() - b.x(), a.y() - b.y());
                let closed = 0.5 * (1.0 + (dx * dx + dy * dy) / (2.0 * a.y() * b.y())).acosh();
                rel_err(closed, teich_distance(&a, &b))
            },
        },
        Property {
            id: "teich.sharp-pair",
            anchor: "Kerckhoff formula: the extremal pair realizes both ratios",
            mode: Tol(1e-10),
            trials: Scaled(500),
            check: |config, rng, _| {
                let (a, b) = (s::box_tau(rng), s::box_tau(rng));
                let k = kerckhoff_sup(&a, &b, &config.basepoint);
                let Some(pair) = k.pair else {
                    return holds(a == b);
                };
                let ratio = |f: &MeasuredFoliation| {
                    extremal_length(&a, f).to_f64() / extremal_length(&b, f).to_f64()
                };
                let unit = |f: &MeasuredFoliation| {
                    (extremal_length(&config.basepoint, f).to_f64() - 1.0).abs()
                };
                ratio_err(ratio(&pair.maximizer), k.lambda_max)
                    .max(ratio_err(ratio(&pair.minimizer), 1.0 / k.lambda_max))
                    .max(unit(&pair.maximizer))
                    .max(unit(&pair.minimizer))
            },
        },
        Property {
            id: "teich.minsky-inequality",
            anchor: "Minsky inequality",
            mode: Tol(1e-12),
            trials: Scaled(10_000),
            check: |_, rng, _| {
                let tau = s::box_tau(rng);
                let f = s::float_foliation(rng);
                let g = s::float_foliation(rng);
                let lhs = intersection_number(&f, &g).square().to_f64();
                let rhs = (extremal_length(&tau, &f) * extremal_length(&tau, &g)).to_f64();
                (lhs / rhs - 1.0).max(0.0)
            },
        },
        Property {
            id: "teich.minsky-sharpness",
            anchor: "Minsky inequality: equality for the vertical and horizontal pair",
            mode: Tol(1e-10),
            trials: Scaled(500),
            check: |_, rng, _| {
                let tau = s::box_tau(rng);
                let sharp = |f: &MeasuredFoliation, g: &MeasuredFoliation| {
                    let lhs = intersection_number(f, g).square().to_f64();
                    let rhs = (extremal_length(&tau, f) * extremal_length(&tau, g)).to_f64();
                    ratio_err(lhs, rhs)
                };
                let (h, v) = principal_pair(&tau);
                let f = s::float_foliation(rng);
                sharp(&h, &v).max(sharp(&f, &minsky_partner(&tau, &f)))
            },
        },
        Property {
            id: "teich.minsky-partner-exact",
            anchor: "Minsky inequality: exact equality on rational data",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let tau = s::rational_tau(rng);
                let f = s::int_foliation(rng, 100);
                let g = minsky_partner(&tau, &f);
                exact_err(
                    &intersection_number(&f, &g).square(),
                    &(extremal_length(&tau, &f) * extremal_length(&tau, &g)),
                )
            },
        },
        Property {
            id: "teich.metric-axioms",
            anchor: "Teichmüller distance: symmetry and triangle inequality",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let (a, b, c) = (s::box_tau(rng), s::box_tau(rng), s::box_tau(rng));
                let ab = teich_distance(&a, &b);
                let excess = teich_distance(&a, &c) - ab - teich_distance(&b, &c);
                rel_err(ab, teich_distance(&b, &a)).max(excess.max(0.0))
            },
        },
        Property {
            id: "teich.geodesic-unit-speed",
            anchor: "Teichmüller geodesic ray: unit speed",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let tau = s::box_tau(rng);
                let alpha = MeasuredFoliation::from_angle(s::angle(rng));
                let t = rng.random_range(0.0..=10.0);
                let p = geodesic_ray(&tau, &alpha, t).unwrap();
                rel_err(teich_distance(&tau, &p), t)
            },
        },
        Property {
            id: "teich.geodesic-ext-decay",
            anchor: "Teichmüller geodesic ray: the vertical foliation shrinks like exp(-2t)",
            mode: Tol(1e-9),
            trials: Scaled(500),
            check: |_, rng, _| {
                let tau = s::box_tau(rng);
                let alpha = MeasuredFoliation::from_angle(s::angle(rng));
                let t = rng.random_range(0.0..=5.0);
                let p = geodesic_ray(&tau, &alpha, t).unwrap();
                ratio_err(
                    extremal_length(&p, &alpha).to_f64(),
                    (-2.0 * t).exp() * extremal_length(&tau, &alpha).to_f64(),
                )
            },
        },
        // ---- the cone
        Property {
            id: "cone.function-values-exact",
            anchor: "unified pairing: interior against a curve is Ext^(1/2)",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let tau = s::rational_tau(rng);
                let c = s::curve_class(rng, 50);
                let (p, q) = (Real::from(c.p), Real::from(c.q));
                let closed = ((&p + &q * tau.re()).square() + (&q * tau.im()).square()) / tau.im();
                let lhs = pairing_i_squared(&lift_phi(&tau), &boundary(c.foliation()));
                exact_err(&lhs, &closed)
            },
        },
        Property {
            id: "cone.log-pairing-distance",
            anchor: "unified pairing: log i on the hyperboloid is the Teichmüller distance",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let (y, z) = (s::box_tau(rng), s::box_tau(rng));
                let p = pairing_i(&lift_phi(&y), &lift_phi(&z)).to_f64();
                rel_err(p.ln(), teich_distance(&y, &z))
            },
        },
        Property {
            id: "cone.hyperboloid-unit",
            anchor: "unified pairing: the unscaled lift lies on the unit hyperboloid",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let a = lift_phi(&s::box_tau(rng));
                exact_err(&pairing_i(&a, &a), &Real::one())
            },
        },
        Property {
            id: "cone.boundary-pairing-determinant",
            anchor: "unified pairing: geometric intersection number on foliations",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let f = s::int_foliation(rng, 1000);
                let g = s::int_foliation(rng, 1000);
                let (a, b) = f.to_f64();
                let (c, d) = g.to_f64();
                let det = (a as i64 * d as i64 - b as i64 * c as i64).abs();
                exact_err(&pairing_i(&boundary(f), &boundary(g)), &Real::from(det))
            },
        },
        Property {
            id: "cone.light-cone",
            anchor: "hyperboloid and light cone: self-pairing",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let a = s::cone_point(rng);
                let expected = match &a {
                    ConePoint::Interior { scale, .. } => Real::from(scale * scale),
                    _ => Real::zero(),
                };
                exact_err(&pairing_i(&a, &a), &expected)
            },
        },
        Property {
            id: "cone.gromov-interior",
            anchor: "extended Gromov product: agrees with the metric one inside",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (y, z) = (s::box_tau(rng), s::box_tau(rng));
                let extended = gm_gromov_product(
                    x0,
                    &ClosurePoint::Interior(y.clone()),
                    &ClosurePoint::Interior(z.clone()),
                );
                rel_err(extended, gromov_product(x0, &y, &z))
            },
        },
        Property {
            id: "cone.gromov-boundary-exact",
            anchor: "extended Gromov product: boundary formula via intersection number",
            mode: Exact,
            trials: Scaled(200),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let f = s::curve_class(rng, 50).foliation();
                let g = s::curve_class(rng, 50).foliation();
                let based = pairing_i_squared(
                    &lift_psi(x0, &ModelPoint::unit(ClosurePoint::Boundary(f.clone()))),
                    &lift_psi(x0, &ModelPoint::unit(ClosurePoint::Boundary(g.clone()))),
                );
                let ext = |h: &MeasuredFoliation| {
                    (&h.a + &h.b * x0.re()).square() / x0.im() + h.b.square() * x0.im()
                };
                let det = &f.a * &g.b - &f.b * &g.a;
                exact_err(&based, &(det.square() / (ext(&f) * ext(&g))))
            },
        },
        Property {
            id: "cone.radial-limit",
            anchor: "continuity of the unified pairing along geodesic rays",
            mode: Tol(1e-6),
            trials: Scaled(50),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let y = interior_slice(s::box_tau(rng));
                let target = if rng.random_bool(0.2) {
                    IdealPoint::Infinity
                } else {
                    IdealPoint::Finite(Real::ratio(rng.random_range(-300..=300), 100))
                };
                let alpha = boundary_slope(&target);
                let far = geodesic_ray(x0, &alpha, 20.0).unwrap();
                let along = pairing_i_based(x0, &y, &interior_slice(far)).to_f64();
                let limit =
                    pairing_i_based(x0, &y, &ModelPoint::unit(ClosurePoint::Boundary(alpha)))
                        .to_f64();
                rel_err(along, limit)
            },
        },
        Property {
            id: "cone.ext-interior-closed-form",
            anchor: "extremal length on the cone: interior formula",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (y, z) = (s::box_tau(rng), s::box_tau(rng));
                let t: f64 = rng.random_range(0.25..=3.0);
                let m = ModelPoint::new(t, ClosurePoint::Interior(z.clone())).unwrap();
                let value = ext_on_cone(&y, &lift_psi(x0, &m)).to_f64();
                let closed =
                    t * t * (2.0 * teich_distance(&y, &z) - 2.0 * teich_distance(x0, &z)).exp();
                ratio_err(value, closed)
            },
        },
        Property {
            id: "cone.ext-sup-oracle",
            anchor: "intrinsic representation of extremal length as a supremum",
            mode: Tol(1e-8),
            trials: Scaled(500),
            check: |config, rng, _| {
                let y = s::box_tau(rng);
                let a = s::nonzero_cone_point(rng);
                let sup = ext_sup_oracle(&y, &a, config.samples).unwrap();
                ratio_err(sup, ext_on_cone(&y, &a).to_f64())
            },
        },
        Property {
            id: "cone.nontriviality",
            anchor: "extremal length on the cone vanishes only at the vertex",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let y = s::box_tau(rng);
                let a = s::cone_point(rng);
                holds(ext_on_cone(&y, &a).is_zero() == a.is_zero())
            },
        },
        Property {
            id: "cone.distortion",
            anchor: "extremal length on the cone: distortion property",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let (y1, y2) = (s::box_tau(rng), s::box_tau(rng));
                let a = s::nonzero_cone_point(rng);
                let k = (2.0 * teich_distance(&y1, &y2)).exp();
                let r = ext_on_cone(&y2, &a).to_f64() / ext_on_cone(&y1, &a).to_f64();
                (r / k - 1.0).max(1.0 / (k * r) - 1.0).max(0.0)
            },
        },
        Property {
            id: "cone.level-set-boundary",
            anchor: "boundedness implies compactness: unit slice on the boundary",
            mode: Exact,
            trials: Scaled(500),
            check: |config, rng, _| {
                let m = ModelPoint::unit(ClosurePoint::Boundary(s::int_foliation(rng, 1000)));
                let x0 = &config.basepoint;
                exact_err(&ext_on_cone(x0, &lift_psi(x0, &m)), &Real::one())
            },
        },
        Property {
            id: "cone.level-set-interior",
            anchor: "boundedness implies compactness: unit slice inside",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |config, rng, _| {
                let m = interior_slice(s::box_tau(rng));
                rel_err(ext_at_basepoint(config, &m), 1.0)
            },
        },
        Property {
            id: "cone.neighborhood-sandwich",
            anchor: "neighborhood system: extremal length sandwich",
            mode: Tol(1e-12),
            trials: Scaled(200),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (zeta, eta, delta) = s::neighborhood_case(rng);
                let verdict = in_neighborhood(x0, &zeta, &eta, delta, config.samples).unwrap();
                if verdict != Membership::Inside {
                    return 0.0;
                }
                let ez = ext_at_basepoint(config, &zeta).sqrt();
                let ee = ext_at_basepoint(config, &eta).sqrt();
                let low = (1.0 - delta) * ez - ee;
                let high = ee - (1.0 + delta) * ez;
                low.max(high).max(0.0) / ez.max(1.0)
            },
        },
        Property {
            id: "cone.equicontinuity",
            anchor: "equicontinuity of the extended E functions",
            mode: Tol(1e-12),
            trials: Scaled(200),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (zeta, eta, delta) = s::neighborhood_case(rng);
                let y = s::box_tau(rng);
                let verdict = in_neighborhood(x0, &zeta, &eta, delta, config.samples).unwrap();
                if verdict != Membership::Inside {
                    return 0.0;
                }
                let (za, ea) = (lift_psi(x0, &zeta), lift_psi(x0, &eta));
                let gap = (e_on_cone(x0, &y, &za) - e_on_cone(x0, &y, &ea)).abs();
                let bound = ext_at_basepoint(config, &zeta).sqrt().max(1.0) * delta;
                (gap - bound).max(0.0)
            },
        },
        Property {
            id: "cone.based-symmetry",
            anchor: "based pairing: symmetry",
            mode: Exact,
            trials: Scaled(500),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (m1, m2) = (s::model_point(rng), s::model_point(rng));
                exact_err(
                    &pairing_i_based(x0, &m1, &m2),
                    &pairing_i_based(x0, &m2, &m1),
                )
            },
        },
        Property {
            id: "cone.basepoint-independence",
            anchor: "unified pairing: independence of the basepoint",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let x1 = s::box_tau(rng);
                let (a, b) = (s::cone_point(rng), s::cone_point(rng));
                let p0 = pairing_i_based(x0, &cone_to_model(x0, &a), &cone_to_model(x0, &b));
                let p1 = pairing_i_based(&x1, &cone_to_model(&x1, &a), &cone_to_model(&x1, &b));
                rel_err(p0.to_f64(), p1.to_f64())
            },
        },
        Property {
            id: "cone.extended-minsky",
            anchor: "Minsky inequality on the cone",
            mode: Tol(1e-12),
            trials: Scaled(500),
            check: |_, rng, _| {
                let x = s::box_tau(rng);
                let (a, b) = (s::nonzero_cone_point(rng), s::nonzero_cone_point(rng));
                let lhs = pairing_i_squared(&a, &b).to_f64();
                let rhs = ext_on_cone(&x, &a).to_f64() * ext_on_cone(&x, &b).to_f64();
                (lhs / rhs - 1.0).max(0.0)
            },
        },
        Property {
            id: "cone.extended-minsky-sharp",
            anchor: "Minsky inequality on the cone: equality at the ends of a geodesic",
            mode: Tol(1e-10),
            trials: Scaled(500),
            check: |_, rng, _| {
                let x = s::box_tau(rng);
                let r: f64 = if rng.random_bool(0.1) {
                    f64::INFINITY
                } else {
                    rng.random_range(-5.0..=5.0)
                };
                // The other end of the half-circle through x and r.
                let (u, v) = (x.x(), x.y());
                let other = if r.is_infinite() {
                    u
                } else {
                    let centre = (u * u + v * v - r * r) / (2.0 * (u - r));
                    2.0 * centre - r
                };
                let slope = |e: f64| {
                    if e.is_infinite() {
                        MeasuredFoliation::new(1, 0)
                    } else {
                        MeasuredFoliation::from_f64(-e, 1.0)
                    }
                };
                let (a, b) = (boundary(slope(r)), boundary(slope(other)));
                let lhs = pairing_i_squared(&a, &b).to_f64();
                let rhs = ext_on_cone(&x, &a).to_f64() * ext_on_cone(&x, &b).to_f64();
                ratio_err(lhs, rhs)
            },
        },
        Property {
            id: "cone.null-space",
            anchor: "null spaces: trivial inside, a ray on the boundary",
            mode: Exact,
            trials: Scaled(500),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let inner =
                    ConePoint::interior(rng.random_range(0.1..=3.0), s::box_tau(rng)).unwrap();
                let other = s::nonzero_cone_point(rng);
                let f = s::int_foliation(rng, 100);
                let k = s::positive_rational(rng);
                let g = s::int_foliation(rng, 100);
                let trivial_inside = !null_test(x0, &inner, &other, config.tol);
                let ray = null_test(x0, &boundary(f.clone()), &boundary(f.scale(&k)), 0.0);
                let off_ray = null_test(x0, &boundary(f.clone()), &boundary(g.clone()), 0.0)
                    == f.is_proportional(&g);
                holds(trivial_inside && ray && off_ray)
            },
        },
        Property {
            id: "cone.dinf-monotone",
            anchor: "truncated sup-log distance: monotone in the truncation",
            mode: Exact,
            trials: Scaled(100),
            check: |config, rng, _| {
                let (y, z) = (s::box_tau(rng), s::box_tau(rng));
                let values = dinf_sequence(config, &y, &z);
                holds(values.windows(2).all(|w| w[0].1 <= w[1].1))
            },
        },
        Property {
            id: "cone.dinf-gap",
            anchor: "truncated sup-log distance: convergence to the Teichmüller distance",
            mode: Tol(1e-6),
            trials: Scaled(100),
            check: |config, rng, _| {
                let (y, z) = (s::box_tau(rng), s::box_tau(rng));
                let values = dinf_sequence(config, &y, &z);
                let last = values.last().expect("at least one truncation").1;
                (teich_distance(&y, &z) - last).abs()
            },
        },
        // ---- mapping classes
        Property {
            id: "mcg.isometry",
            anchor: "mapping classes act by isometries",
            mode: Tol(1e-12),
            trials: Scaled(200),
            check: |_, rng, _| {
                let (m, _) = MappingClass::random_word(rng, 8);
                let (a, b) = (s::box_tau(rng), s::box_tau(rng));
                rel_err(
                    teich_distance(&act_on_teich(&m, &a), &act_on_teich(&m, &b)),
                    teich_distance(&a, &b),
                )
            },
        },
        Property {
            id: "mcg.intersection-invariance",
            anchor: "mapping classes preserve the intersection number",
            mode: Exact,
            trials: Scaled(200),
            check: |_, rng, _| {
                let (m, _) = MappingClass::random_word(rng, 8);
                let (f, g) = (s::int_foliation(rng, 1000), s::int_foliation(rng, 1000));
                exact_err(
                    &intersection_number(&act_on_foliation(&m, &f), &act_on_foliation(&m, &g)),
                    &intersection_number(&f, &g),
                )
            },
        },
        Property {
            id: "mcg.ext-invariance",
            anchor: "mapping classes preserve extremal length",
            mode: Exact,
            trials: Scaled(200),
            check: |_, rng, _| {
                let (m, _) = MappingClass::random_word(rng, 8);
                let tau = s::rational_tau(rng);
                let f = s::int_foliation(rng, 1000);
                exact_err(
                    &extremal_length(&act_on_teich(&m, &tau), &act_on_foliation(&m, &f)),
                    &extremal_length(&tau, &f),
                )
            },
        },
        Property {
            id: "mcg.pairing-equivariance",
            anchor: "mapping classes preserve the unified pairing",
            mode: Tol(1e-12),
            trials: Scaled(200),
            check: |_, rng, _| {
                let (m, _) = MappingClass::random_word(rng, 8);
                let (a, b) = (s::cone_point(rng), s::cone_point(rng));
                let moved = pairing_i(&act_on_cone(&m, &a), &act_on_cone(&m, &b));
                rel_err(moved.to_f64(), pairing_i(&a, &b).to_f64())
            },
        },
        Property {
            id: "mcg.e-function-equivariance",
            anchor: "equivariance of the E functions under homeomorphisms",
            mode: Exact,
            trials: Scaled(200),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (m, _) = MappingClass::random_word(rng, 8);
                let inv = m.inverse();
                let g = s::int_foliation(rng, 100);
                let (f1, f2) = (s::int_foliation(rng, 100), s::int_foliation(rng, 100));
                let moved = ClosurePoint::Boundary(act_on_foliation(&m, &g));
                let fixed = ClosurePoint::Boundary(g.clone());
                let e = |p: &ClosurePoint, f: &MeasuredFoliation| e_function_squared(x0, p, f);
                let pulled = |f: &MeasuredFoliation| act_on_foliation(&inv, f);
                // F -> E_{A[G]}(F) and F -> E_{[G]}(A^-1 F) are proportional.
                let cross = exact_err(
                    &(e(&moved, &f1) * e(&fixed, &pulled(&f2))),
                    &(e(&moved, &f2) * e(&fixed, &pulled(&f1))),
                );
                let ratio = exact_err(
                    &(e(&moved, &f1) * extremal_length(x0, &act_on_foliation(&m, &g))),
                    &(e(&fixed, &pulled(&f1)) * extremal_length(x0, &g)),
                );
                cross.max(ratio)
            },
        },
        Property {
            id: "mcg.ideal-commutation",
            anchor: "action at the boundary commutes with ideal endpoints",
            mode: Exact,
            trials: Scaled(200),
            check: |_, rng, _| {
                let (m, _) = MappingClass::random_word(rng, 8);
                let r = if rng.random_bool(0.1) {
                    IdealPoint::Infinity
                } else {
                    IdealPoint::Finite(Real::ratio(
                        rng.random_range(-500..=500),
                        rng.random_range(1..=100),
                    ))
                };
                let lhs = boundary_slope(&act_on_ideal(&m, &r));
                let rhs = act_on_foliation(&m, &boundary_slope(&r));
                holds(lhs.is_proportional(&rhs))
            },
        },
        Property {
            id: "mcg.null-space-equivariance",
            anchor: "mapping classes carry null spaces to null spaces",
            mode: Exact,
            trials: Scaled(200),
            check: |config, rng, _| {
                let x0 = &config.basepoint;
                let (m, _) = MappingClass::random_word(rng, 8);
                let f = s::int_foliation(rng, 100);
                let g = if rng.random_bool(0.5) {
                    f.scale(&s::positive_rational(rng))
                } else {
                    s::int_foliation(rng, 100)
                };
                let before = null_test(x0, &boundary(f.clone()), &boundary(g.clone()), 0.0);
                let after = null_test(
                    x0,
                    &boundary(act_on_foliation(&m, &f)),
                    &boundary(act_on_foliation(&m, &g)),
                    0.0,
                );
                holds(before == after)
            },
        },
        Property {
            id: "mcg.group-action",
            anchor: "mapping classes: composition acts as a group action",
            mode: Exact,
            trials: Scaled(200),
            check: |_, rng, _| {
                let (a, _) = MappingClass::random_word(rng, 8);
                let (b, _) = MappingClass::random_word(rng, 8);
                let tau = s::rational_tau(rng);
                let lhs = act_on_teich(&a.compose(&b), &tau);
                let rhs = act_on_teich(&a, &act_on_teich(&b, &tau));
                holds(lhs == rhs)
            },
        },
        // ---- the frame space
        Property {
            id: "walsh.gromov-x",
            anchor: "frame space: Gromov product of the bottom corners vanishes",
            mode: Exact,
            trials: Fixed(30),
            check: |_, _, k| {
                let n = k as u32 + 1;
                rational_err(walsh_gromov(&x1(n), &x2(n)), Rational64::from(0))
            },
        },
        Property {
            id: "walsh.gromov-y",
            anchor: "frame space: Gromov product of the top corners is n",
            mode: Exact,
            trials: Fixed(30),
            check: |_, _, k| {
                let n = k as u32 + 1;
                rational_err(walsh_gromov(&y1(n), &y2(n)), Rational64::from(n as i64))
            },
        },
        Property {
            id: "walsh.distance-examples",
            anchor: "frame space: distances to the top corners",
            mode: Exact,
            trials: Fixed(30),
            check: |_, _, k| {
                let n = k as u32 + 1;
                let two_n = Rational64::from(2 * n as i64);
                rational_err(walsh_distance(&b0(), &y1(n)), two_n)
                    .max(rational_err(walsh_distance(&y1(n), &y2(n)), two_n))
            },
        },
        Property {
            id: "walsh.dijkstra-oracle",
            anchor: "frame space: closed-form distance equals graph shortest path",
            mode: Exact,
            trials: Scaled(1000),
            check: |_, rng, _| {
                let p = s::walsh_point(rng, 30, 60);
                let q = s::walsh_point(rng, 30, 60);
                rational_err(walsh_distance(&p, &q), dijkstra_distance(&p, &q, 30))
            },
        },
        Property {
            id: "walsh.metric-axioms",
            anchor: "frame space: metric axioms",
            mode: Exact,
            trials: Scaled(500),
            check: |_, rng, _| {
                let p = s::walsh_point(rng, 12, 30);
                let q = s::walsh_point(rng, 12, 30);
                let r = s::walsh_point(rng, 12, 30);
                let pq = walsh_distance(&p, &q);
                let excess = walsh_distance(&p, &r) - pq - walsh_distance(&q, &r);
                let positive = (pq == Rational64::from(0)) == (p == q);
                rational_err(pq, walsh_distance(&q, &p))
                    .max(holds(positive))
                    .max(rational_err(
                        excess.max(Rational64::from(0)),
                        Rational64::from(0),
                    ))
            },
        },
        Property {
            id: "walsh.busemann",
            anchor: "frame space: both corner sequences define the same Busemann point",
            mode: Exact,
            trials: Fixed(30),
            check: |config, _, k| {
                let mut rng = s::trial_rng(config.seed, SAMPLE_STREAM, 0);
                let sample: Vec<_> = (0..50).map(|_| s::walsh_point(&mut rng, 8, 20)).collect();
                // Past every frame index and line coordinate in the sample.
                let n = 21 + k as u32;
                sample
                    .iter()
                    .map(|p| rational_err(horofunction(&x1(n), p), horofunction(&y1(n), p)))
                    .fold(0.0, f64::max)
            },
        },
    ]
}

/// Truncations used for the d_inf sequence, ending at the configured one.
pub fn truncations(config: &RunConfig) -> Vec<u32> {
    let mut ns: Vec<u32> = [1, 2, 5, 10, 25, 50]
        .into_iter()
        .filter(|&n| n < config.truncation)
        .collect();
    ns.push(config.truncation);
    ns
}

/// `(N, d_inf)` between the unscaled lifts of `y` and `z`.
pub fn dinf_sequence(config: &RunConfig, y: &TeichPoint, z: &TeichPoint) -> Vec<(u32, f64)> {
    truncations(config)
        .into_iter()
        .map(|n| {
            let family = curve_family(n).expect("positive truncation");
            let f = FunctionVector::of_cone_point(&lift_phi(y), family.clone());
            let g = FunctionVector::of_cone_point(&lift_phi(z), family);
            (n, d_infinity(&f, &g).expect("same family"))
        })
        .collect()
}
