//! Verification reports and full-precision number formatting.

use serde::{Serialize, Serializer};

use crate::config::ConfigEcho;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyRecord {
    pub id: String,
    /// The result this property instantiates, by name.
    pub anchor: String,
    pub trials: usize,
    #[serde(serialize_with = "number_or_string")]
    pub max_error: f64,
    pub tolerance: f64,
    pub exact: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub config: ConfigEcho,
    pub properties: Vec<PropertyRecord>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(suite: &str, config: ConfigEcho, properties: Vec<PropertyRecord>) -> Self {
        let pass = properties.iter().all(|p| p.pass);
        VerifyReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            config,
            properties,
            pass,
        }
    }

    pub fn property(&self, id: &str) -> Option<&PropertyRecord> {
        self.properties.iter().find(|p| p.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// JSON has no infinities; non-finite errors are written as strings.
fn number_or_string<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_str(&format_float(*v))
    }
}

/// 17 significant digits; `inf`, `-inf` and `nan` spelled out.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for v in [0.1, 2f64.sqrt(), 1e-300, -7.25, 0.0] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_float(f64::INFINITY), "inf");
    }

    #[test]
    fn infinite_error_is_a_string() {
        let r = PropertyRecord {
            id: "x".into(),
            anchor: "y".into(),
            trials: 1,
            max_error: f64::INFINITY,
            tolerance: 0.0,
            exact: true,
            pass: false,
        };
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""max_error":"inf""#));
    }
}
