//! Plain SVG 1.1 figures. Coordinates are printed with three decimals so the
//! output is byte-stable.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use gmcone::cone::{lift_phi, pairing_i, ConePoint};
use gmcone::teich::{geodesic_endpoints, geodesic_ray, teich_distance, IdealPoint};
use gmcone::{CurveClass, MeasuredFoliation, TeichPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 320.0;
const MARGIN: f64 = 24.0;

/// Affine map from world coordinates (y up) to the canvas (y down) with a
/// common scale on both axes.
struct View {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl View {
    fn fit(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Self {
        let sx = (WIDTH - 2.0 * MARGIN) / (xmax - xmin).max(1e-9);
        let sy = (HEIGHT - 2.0 * MARGIN) / (ymax - ymin).max(1e-9);
        let scale = sx.min(sy);
        // Centre the drawing horizontally.
        let used = (xmax - xmin) * scale;
        let x0 = xmin - (WIDTH - 2.0 * MARGIN - used) / (2.0 * scale);
        View {
            x0,
            y0: ymin,
            scale,
        }
    }

    fn x(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT - MARGIN - (y - self.y0) * self.scale
    }
}

fn open_svg() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" \
         height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    )
}

/// The geodesic through `a` and `b` with its two ideal endpoints.
pub fn geodesic(a: &TeichPoint, b: &TeichPoint) -> Result<String> {
    let Some((back, fwd)) = geodesic_endpoints(a, b) else {
        bail!("a geodesic needs two distinct points");
    };
    let finite: Vec<f64> = [&back, &fwd]
        .iter()
        .filter_map(|e| match e {
            IdealPoint::Finite(r) => Some(r.to_f64()),
            IdealPoint::Infinity => None,
        })
        .collect();
    let mut xs = vec![a.x(), b.x()];
    xs.extend(&finite);
    let (xmin, xmax) = xs
        .iter()
        .fold((f64::MAX, f64::MIN), |(l, h), &x| (l.min(x), h.max(x)));
    let radius = if finite.len() == 2 {
        0.5 * (finite[0] - finite[1]).abs()
    } else {
        0.0
    };
    let top = a.y().max(b.y()).max(radius) * 1.25;
    let pad = 0.25 * (xmax - xmin).max(top);
    let view = View::fit(xmin - pad, xmax + pad, 0.0, top);

    let mut svg = open_svg();
    let _ = writeln!(
        svg,
        "<line class=\"axis\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"black\"/>",
        MARGIN,
        view.y(0.0),
        WIDTH - MARGIN,
        view.y(0.0)
    );
    let ends = if finite.len() == 2 {
        let (l, r) = (finite[0].min(finite[1]), finite[0].max(finite[1]));
        let rad = radius * view.scale;
        let _ = writeln!(
            svg,
            "<path class=\"geodesic\" d=\"M {:.3} {:.3} A {rad:.3} {rad:.3} 0 0 1 {:.3} {:.3}\" \
             fill=\"none\" stroke=\"steelblue\"/>",
            view.x(l),
            view.y(0.0),
            view.x(r),
            view.y(0.0)
        );
        vec![(view.x(l), view.y(0.0)), (view.x(r), view.y(0.0))]
    } else {
        let x = view.x(finite[0]);
        let _ = writeln!(
            svg,
            "<path class=\"geodesic\" d=\"M {x:.3} {:.3} L {x:.3} {:.3}\" fill=\"none\" \
             stroke=\"steelblue\"/>",
            view.y(0.0),
            MARGIN
        );
        vec![(x, view.y(0.0)), (x, MARGIN)]
    };
    for (cx, cy) in ends {
        let _ = writeln!(
            svg,
            "<circle class=\"ideal\" cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"4\" fill=\"crimson\"/>"
        );
    }
    for p in [a, b] {
        let _ = writeln!(
            svg,
            "<circle class=\"point\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\" fill=\"black\"/>",
            view.x(p.x()),
            view.y(p.y())
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Values of a cone point on the three curves `(1,0)`, `(0,1)`, `(1,1)`.
fn three_coordinates(a: &ConePoint) -> [f64; 3] {
    [(1, 0), (0, 1), (1, 1)].map(|(p, q)| {
        let c = CurveClass { p, q };
        pairing_i(a, &ConePoint::boundary(c.foliation()).expect("nonzero")).to_f64()
    })
}

fn project(v: [f64; 3]) -> (f64, f64) {
    let (c, s) = (30f64.to_radians().cos(), 30f64.to_radians().sin());
    ((v[0] - v[1]) * c, v[2] - (v[0] + v[1]) * s)
}

/// Unscaled and basepoint-damped lifts along a ray from the basepoint in a
/// seeded random direction, projected from three curve coordinates.
pub fn embedding(config: &RunConfig) -> Result<String> {
    let x0 = &config.basepoint;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let alpha = MeasuredFoliation::from_angle(rng.random_range(0.0..std::f64::consts::PI));
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for k in 0..=24 {
        let z = geodesic_ray(x0, &alpha, 0.1 * f64::from(k))?;
        let a = lift_phi(&z);
        let damped = a.scaled(&(-teich_distance(x0, &z)).exp().into());
        phi.push(project(three_coordinates(&a)));
        psi.push(project(three_coordinates(&damped)));
    }
    let all = phi.iter().chain(&psi);
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let view = View::fit(xmin, xmax, ymin, ymax);
    let mut svg = open_svg();
    for (class, colour, pts) in [("phi", "steelblue", &phi), ("psi", "darkorange", &psi)] {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", view.x(x), view.y(y)))
            .collect();
        let _ = writeln!(
            svg,
            "<polyline class=\"{class}\" points=\"{}\" fill=\"none\" stroke=\"{colour}\"/>",
            coords.join(" ")
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Frames `C_1, ..., C_frames` standing on the line.
pub fn walsh(frames: u32) -> Result<String> {
    if frames == 0 {
        bail!("need at least one frame");
    }
    let k = f64::from(frames);
    let view = View::fit(-k - 1.0, k + 1.0, 0.0, k + 0.5);
    let mut svg = open_svg();
    let _ = writeln!(
        svg,
        "<line class=\"baseline\" x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"black\"/>",
        view.x(-k - 1.0),
        view.y(0.0),
        view.x(k + 1.0),
        view.y(0.0)
    );
    for n in 1..=frames {
        let n = f64::from(n);
        let _ = writeln!(
            svg,
            "<rect class=\"frame\" x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" \
             fill=\"none\" stroke=\"steelblue\"/>",
            view.x(-n),
            view.y(n),
            2.0 * n * view.scale,
            n * view.scale
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geodesic_structure() {
        let svg = geodesic(&TeichPoint::i(), &TeichPoint::new(0, 2).unwrap()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("class=\"ideal\"").count(), 2);
        let svg = geodesic(&TeichPoint::i(), &TeichPoint::new(1, 1).unwrap()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains(" A "));
        assert!(geodesic(&TeichPoint::i(), &TeichPoint::i()).is_err());
    }

    #[test]
    fn walsh_structure() {
        let svg = walsh(3).unwrap();
        assert_eq!(svg.matches("<rect").count(), 3);
        assert_eq!(svg.matches("class=\"baseline\"").count(), 1);
    }

    #[test]
    fn embedding_is_deterministic() {
        let c = RunConfig::default();
        assert_eq!(embedding(&c).unwrap(), embedding(&c).unwrap());
        let other = RunConfig {
            seed: 1,
            ..RunConfig::default()
        };
        assert_ne!(embedding(&c).unwrap(), embedding(&other).unwrap());
    }
}
