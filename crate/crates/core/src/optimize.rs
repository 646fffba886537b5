//! Suprema over the projective slope circle.
//!
//! The slope circle is parameterized by `theta in [0, pi)` through
//! `(cos theta, sin theta)`. Functions are sampled on a uniform grid, the best
//! grid-local maxima are refined by golden-section search, and the best refined
//! value is returned.

use std::f64::consts::PI;

/// Grid density used throughout the crate when no other value is configured.
pub const DEFAULT_SAMPLES: usize = 4096;

/// Bracket width at which golden-section refinement stops.
pub const REFINE_TOL: f64 = 1e-10;

/// Number of grid-local maxima that get refined.
const CANDIDATES: usize = 4;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleMax {
    pub theta: f64,
    pub value: f64,
}

/// Maximize a `pi`-periodic function of the slope angle.
pub fn maximize_on_slope_circle<F>(f: F, samples: usize) -> CircleMax
where
    F: Fn(f64) -> f64,
{
    let samples = samples.max(3);
    let step = PI / samples as f64;
    let values: Vec<f64> = (0..samples).map(|k| f(k as f64 * step)).collect();

    let mut peaks: Vec<usize> = (0..samples)
        .filter(|&k| {
            let prev = values[(k + samples - 1) % samples];
            let next = values[(k + 1) % samples];
            values[k] >= prev && values[k] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    peaks.truncate(CANDIDATES);

    let mut best = CircleMax {
        theta: 0.0,
        value: f64::NEG_INFINITY,
    };
    for k in peaks {
        let centre = k as f64 * step;
        let refined = golden_section_max(&f, centre - step, centre + step);
        let candidate = if refined.value >= values[k] {
            refined
        } else {
            CircleMax {
                theta: centre,
                value: values[k],
            }
        };
        if candidate.value > best.value {
            best = candidate;
        }
    }
    best.theta = best.theta.rem_euclid(PI);
    best
}

fn golden_section_max<F>(f: &F, mut lo: f64, mut hi: f64) -> CircleMax
where
    F: Fn(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > REFINE_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        CircleMax {
            theta: x1,
            value: f1,
        }
    } else {
        CircleMax {
            theta: x2,
            value: f2,
        }
    }
}
