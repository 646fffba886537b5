//! Convergence tables: truncated sup-log distance against the Teichmüller
//! distance, the pairing along a ray against its boundary value, and Gromov
//! products of two rays against their boundary value.

use anyhow::Result;
use gmcone::cone::{pairing_i_based, ClosurePoint, ModelPoint};
use gmcone::foliation::intersection_number;
use gmcone::teich::{
    boundary_slope, extremal_length, geodesic_ray, gromov_product, teich_distance, IdealPoint,
};
use gmcone::{MeasuredFoliation, TeichPoint};

use crate::config::RunConfig;
use crate::report::format_float;
use crate::suites::dinf_sequence;

fn write_rows(header: &[&str], rows: Vec<Vec<f64>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.into_iter().map(format_float))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Ray parameters `0, 1, ..., t_max`.
fn ray_times(t_max: u32) -> impl Iterator<Item = f64> {
    (0..=t_max).map(f64::from)
}

/// Columns `N, d_infinity, teich_distance, gap`.
pub fn dinf(config: &RunConfig, y: &TeichPoint, z: &TeichPoint) -> Result<String> {
    let d = teich_distance(y, z);
    let rows = dinf_sequence(config, y, z)
        .into_iter()
        .map(|(n, v)| vec![f64::from(n), v, d, (d - v).abs()])
        .collect();
    write_rows(&["N", "d_infinity", "teich_distance", "gap"], rows)
}

/// Columns `t, pairing, limit, error`: pairing of the slice point `probe` with
/// the slice point at distance `t` from the basepoint toward `target`.
pub fn radial(
    config: &RunConfig,
    probe: &TeichPoint,
    target: &IdealPoint,
    t_max: u32,
) -> Result<String> {
    let x0 = &config.basepoint;
    let alpha = boundary_slope(target);
    let y = ModelPoint::unit(ClosurePoint::Interior(probe.clone()));
    let limit = pairing_i_based(
        x0,
        &y,
        &ModelPoint::unit(ClosurePoint::Boundary(alpha.clone())),
    )
    .to_f64();
    let mut rows = Vec::new();
    for t in ray_times(t_max) {
        let z = geodesic_ray(x0, &alpha, t)?;
        let v = pairing_i_based(x0, &y, &ModelPoint::unit(ClosurePoint::Interior(z))).to_f64();
        rows.push(vec![t, v, limit, (v - limit).abs()]);
    }
    write_rows(&["t", "pairing", "limit", "error"], rows)
}

/// Columns `t, gromov_product, limit, error` for the rays from the basepoint
/// with vertical foliations `f` and `g`.
pub fn gromov_boundary(
    config: &RunConfig,
    f: &MeasuredFoliation,
    g: &MeasuredFoliation,
    t_max: u32,
) -> Result<String> {
    let x0 = &config.basepoint;
    let i = intersection_number(f, g).to_f64();
    let norm = (extremal_length(x0, f).to_f64() * extremal_length(x0, g).to_f64()).sqrt();
    let limit = if i == 0.0 {
        f64::INFINITY
    } else {
        -0.5 * (i / norm).ln()
    };
    let mut rows = Vec::new();
    for t in ray_times(t_max) {
        let y = geodesic_ray(x0, f, t)?;
        let z = geodesic_ray(x0, g, t)?;
        let v = gromov_product(x0, &y, &z);
        rows.push(vec![t, v, limit, (v - limit).abs()]);
    }
    write_rows(&["t", "gromov_product", "limit", "error"], rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column(text: &str, k: usize) -> Vec<f64> {
        csv::Reader::from_reader(text.as_bytes())
            .records()
            .map(|r| r.unwrap()[k].parse().unwrap())
            .collect()
    }

    #[test]
    fn dinf_vertical_pair_has_no_gap() {
        let c = RunConfig::default();
        let out = dinf(&c, &TeichPoint::i(), &TeichPoint::new(0, 2).unwrap()).unwrap();
        let gaps = column(&out, 3);
        assert_eq!(gaps.len(), 6);
        assert!(gaps.iter().all(|&g| g < 1e-15));
    }

    #[test]
    fn radial_toward_infinity() {
        let c = RunConfig::default();
        let out = radial(
            &c,
            &TeichPoint::new(0, 2).unwrap(),
            &IdealPoint::Infinity,
            20,
        )
        .unwrap();
        let errors = column(&out, 3);
        assert!(*errors.last().unwrap() < 1e-6);
        assert!((column(&out, 2)[0] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn gromov_of_axis_rays_is_zero() {
        let c = RunConfig::default();
        let out = gromov_boundary(
            &c,
            &MeasuredFoliation::new(1, 0),
            &MeasuredFoliation::new(0, 1),
            10,
        )
        .unwrap();
        assert!(column(&out, 1).iter().all(|&v| v.abs() < 1e-12));
        assert_eq!(column(&out, 2)[0], 0.0);
    }

    #[test]
    fn gromov_of_oblique_rays_approaches_limit() {
        let c = RunConfig::default();
        let out = gromov_boundary(
            &c,
            &MeasuredFoliation::new(1, 0),
            &MeasuredFoliation::new(1, 1),
            20,
        )
        .unwrap();
        let errors = column(&out, 3);
        assert!(*errors.last().unwrap() < 1e-9);
        assert!(errors.windows(2).all(|w| w[1] <= w[0] + 1e-15));
    }
}
