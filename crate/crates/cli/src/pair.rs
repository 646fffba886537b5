//! Pairwise tables of the unified pairing for a list of points.
//!
//! Input is a JSON array; each entry is one of
//!
//! ```json
//! {"kind": "zero"}
//! {"kind": "interior", "x": 0, "y": 2, "scale": 1}
//! {"kind": "boundary", "a": 1, "b": 0}
//! {"kind": "model", "t": 1, "interior": [0, 2]}
//! {"kind": "model", "t": 1, "boundary": [1, 0]}
//! ```
//!
//! Numbers may be JSON numbers or strings such as `"3/4"`; both are read
//! exactly. Model points are lifted at the configured basepoint.

use anyhow::{anyhow, bail, Context, Result};
use gmcone::cone::{lift_psi, pairing_i, ClosurePoint, ConePoint, ModelPoint};
use gmcone::teich::{gromov_product, teich_distance};
use gmcone::{MeasuredFoliation, Real, TeichPoint};
use serde::Deserialize;

use crate::config::RunConfig;
use crate::parse::parse_real;
use crate::report::format_float;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Number {
    fn real(&self) -> Result<Real> {
        match self {
            Number::Int(i) => Ok(Real::from(*i)),
            // Shortest round-trip decimal, then read exactly.
            Number::Float(f) => parse_real(&format!("{f}")),
            Number::Text(s) => parse_real(s),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum PointSpec {
    Zero,
    Interior {
        x: Number,
        y: Number,
        scale: Option<Number>,
    },
    Boundary {
        a: Number,
        b: Number,
        weight: Option<Number>,
    },
    Model {
        t: Number,
        interior: Option<[Number; 2]>,
        boundary: Option<[Number; 2]>,
    },
}

impl PointSpec {
    fn to_cone(&self, x0: &TeichPoint) -> Result<ConePoint> {
        Ok(match self {
            PointSpec::Zero => ConePoint::Zero,
            PointSpec::Interior { x, y, scale } => {
                let scale = match scale {
                    Some(s) => s.real()?.to_f64(),
                    None => 1.0,
                };
                ConePoint::interior(scale, TeichPoint::new(x.real()?, y.real()?)?)?
            }
            PointSpec::Boundary { a, b, weight } => {
                let p = ConePoint::boundary(MeasuredFoliation::new(a.real()?, b.real()?))?;
                match weight {
                    Some(w) => p.scaled(&w.real()?),
                    None => p,
                }
            }
            PointSpec::Model {
                t,
                interior,
                boundary,
            } => {
                let point = match (interior, boundary) {
                    (Some([x, y]), None) => {
                        ClosurePoint::Interior(TeichPoint::new(x.real()?, y.real()?)?)
                    }
                    (None, Some([a, b])) => {
                        ClosurePoint::boundary(MeasuredFoliation::new(a.real()?, b.real()?))?
                    }
                    _ => bail!("a model point needs exactly one of \"interior\" or \"boundary\""),
                };
                lift_psi(x0, &ModelPoint::new(t.real()?, point)?)
            }
        })
    }
}

pub fn read_points(json: &str, x0: &TeichPoint) -> Result<Vec<ConePoint>> {
    let specs: Vec<PointSpec> = serde_json::from_str(json).context("reading point list")?;
    specs
        .iter()
        .enumerate()
        .map(|(k, p)| p.to_cone(x0).map_err(|e| anyhow!("point {k}: {e}")))
        .collect()
}

/// CSV with one row per ordered pair: the pairing, and for two interior
/// points also the distance and the Gromov product at the basepoint.
pub fn pair_table(config: &RunConfig, points: &[ConePoint]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["i", "j", "pairing", "teich_distance", "gromov_product"])?;
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate() {
            let pairing = format_float(pairing_i(a, b).to_f64());
            let (d, g) = match (a, b) {
                (ConePoint::Interior { point: y, .. }, ConePoint::Interior { point: z, .. }) => (
                    format_float(teich_distance(y, z)),
                    format_float(gromov_product(&config.basepoint, y, z)),
                ),
                _ => (String::new(), String::new()),
            };
            w.write_record([i.to_string(), j.to_string(), pairing, d, g])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(csv_text: &str) -> Vec<Vec<String>> {
        csv::Reader::from_reader(csv_text.as_bytes())
            .records()
            .map(|r| r.unwrap().iter().map(String::from).collect())
            .collect()
    }

    #[test]
    fn interior_and_boundary_table() {
        let json = r#"[
            {"kind": "interior", "x": 0, "y": 1},
            {"kind": "interior", "x": 0, "y": 2},
            {"kind": "boundary", "a": 1, "b": 0}
        ]"#;
        let config = RunConfig::default();
        let pts = read_points(json, &config.basepoint).unwrap();
        let table = pair_table(&config, &pts).unwrap();
        let rows = rows(&table);
        assert_eq!(rows.len(), 9);
        let value = |i: usize, j: usize| -> f64 { rows[3 * i + j][2].parse().unwrap() };
        assert!((value(0, 1) - 2f64.sqrt()).abs() < 1e-15);
        assert!((value(1, 2) - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(value(2, 2), 0.0);
        assert!(!rows[1][3].is_empty());
        assert!(rows[2][3].is_empty());
    }

    #[test]
    fn model_points_and_strings() {
        let json = r#"[
            {"kind": "model", "t": "1", "interior": [0, "2"]},
            {"kind": "model", "t": 0.5, "boundary": [3, 4]},
            {"kind": "zero"}
        ]"#;
        let x0 = TeichPoint::i();
        let pts = read_points(json, &x0).unwrap();
        match &pts[0] {
            ConePoint::Interior { scale, .. } => assert!((scale - 0.5f64.sqrt()).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert_eq!(gmcone::cone::ext_on_cone(&x0, &pts[1]), Real::ratio(1, 4));
        assert_eq!(pts[2], ConePoint::Zero);
        assert!(read_points(r#"[{"kind": "model", "t": 1}]"#, &x0).is_err());
        assert!(read_points(r#"[{"kind": "boundary", "a": 0, "b": 0}]"#, &x0).is_err());
    }
}
