//! Random instances for the verification suites.
//!
//! Float points are drawn from the box `|x| <= 3`, `1/4 <= y <= 4`; rational
//! points use dyadic coordinates in the same box so that exact identities can
//! be checked in exact arithmetic.

use std::f64::consts::PI;

use gmcone::cone::{ClosurePoint, ConePoint, ModelPoint};
use gmcone::walsh::WalshPoint;
use gmcone::{CurveClass, MeasuredFoliation, Real, TeichPoint};
use num_rational::Rational64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Independent, reproducible stream for one trial of one property.
pub fn trial_rng(seed: u64, property: usize, trial: usize) -> TrialRng {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((property as u64) << 32) | trial as u64);
    rng
}

pub fn box_tau(rng: &mut TrialRng) -> TeichPoint {
    TeichPoint::new(rng.random_range(-3.0..=3.0), rng.random_range(0.25..=4.0))
        .expect("box lies in the upper half-plane")
}

pub fn rational_tau(rng: &mut TrialRng) -> TeichPoint {
    TeichPoint::new(
        Real::ratio(rng.random_range(-192..=192), 64),
        Real::ratio(rng.random_range(16..=256), 64),
    )
    .expect("box lies in the upper half-plane")
}

pub fn angle(rng: &mut TrialRng) -> f64 {
    rng.random_range(0.0..PI)
}

/// A float foliation with random slope and weight in `[0.1, 10]`.
pub fn float_foliation(rng: &mut TrialRng) -> MeasuredFoliation {
    let w: f64 = rng.random_range(0.1..=10.0);
    let (a, b) = MeasuredFoliation::from_angle(angle(rng)).to_f64();
    MeasuredFoliation::from_f64(w * a, w * b)
}

pub fn int_foliation(rng: &mut TrialRng, bound: i64) -> MeasuredFoliation {
    loop {
        let f = MeasuredFoliation::new(
            rng.random_range(-bound..=bound),
            rng.random_range(-bound..=bound),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn curve_class(rng: &mut TrialRng, bound: i64) -> CurveClass {
    loop {
        if let Ok(c) = CurveClass::new(
            rng.random_range(-bound..=bound),
            rng.random_range(-bound..=bound),
        ) {
            return c;
        }
    }
}

pub fn positive_rational(rng: &mut TrialRng) -> Real {
    Real::ratio(rng.random_range(1..=60), rng.random_range(1..=20))
}

/// Zero with probability 1/10, otherwise an interior or boundary element.
pub fn cone_point(rng: &mut TrialRng) -> ConePoint {
    let roll: f64 = rng.random();
    if roll < 0.1 {
        ConePoint::Zero
    } else {
        nonzero_cone_point(rng)
    }
}

pub fn nonzero_cone_point(rng: &mut TrialRng) -> ConePoint {
    if rng.random_bool(0.5) {
        ConePoint::interior(rng.random_range(0.1..=3.0), box_tau(rng)).expect("positive scale")
    } else {
        let w = positive_rational(rng);
        ConePoint::boundary(int_foliation(rng, 30))
            .expect("nonzero")
            .scaled(&w)
    }
}

pub fn closure_point(rng: &mut TrialRng) -> ClosurePoint {
    if rng.random_bool(0.5) {
        ClosurePoint::Interior(box_tau(rng))
    } else {
        ClosurePoint::Boundary(int_foliation(rng, 30))
    }
}

pub fn model_point(rng: &mut TrialRng) -> ModelPoint {
    ModelPoint {
        t: Real::from(rng.random_range(0.25..=3.0)),
        point: closure_point(rng),
    }
}

/// A model point and a nearby one, together with a radius; used to exercise
/// neighborhood membership with a good share of accepted cases.
pub fn neighborhood_case(rng: &mut TrialRng) -> (ModelPoint, ModelPoint, f64) {
    let zeta = model_point(rng);
    let eps = 0.05;
    let t = zeta.t.to_f64() * (1.0 + rng.random_range(-eps..=eps));
    let point = match &zeta.point {
        ClosurePoint::Interior(tau) => ClosurePoint::Interior(
            TeichPoint::new(
                tau.x() + rng.random_range(-eps..=eps),
                tau.y() * (1.0 + rng.random_range(-eps..=eps)),
            )
            .expect("perturbation stays in the upper half-plane"),
        ),
        ClosurePoint::Boundary(f) => {
            let (a, b) = f.to_f64();
            let turn: f64 = rng.random_range(-eps..=eps) * 0.1;
            let (s, c) = turn.sin_cos();
            ClosurePoint::Boundary(MeasuredFoliation::from_f64(c * a - s * b, s * a + c * b))
        }
    };
    let eta = ModelPoint {
        t: Real::from(t),
        point,
    };
    let delta = rng.random_range(0.05..=0.5);
    (zeta, eta, delta)
}

/// A point of the frame space with coordinates in `Z/4`.
pub fn walsh_point(rng: &mut TrialRng, max_frame: u32, line_bound: i64) -> WalshPoint {
    if rng.random_bool(0.4) {
        WalshPoint::line(Rational64::new(
            rng.random_range(-4 * line_bound..=4 * line_bound),
            4,
        ))
    } else {
        let n = rng.random_range(1..=max_frame);
        let pos = Rational64::new(rng.random_range(0..=16 * n as i64), 4);
        WalshPoint::frame(n, pos).expect("position within the frame")
    }
}
